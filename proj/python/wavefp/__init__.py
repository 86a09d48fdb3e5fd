"""Non-minutiae fingerprint verification toolkit.

Wavelet sub-band texture features (directional coherence/orientation GLCM
statistics, center-area GLCM statistics, Canny edge parameters), Euclidean
matching and FAR/FRR/TSR/EER evaluation.
"""

try:
    from ._wavefp import *  # noqa: F401,F403  packaged layout
    from . import _wavefp as _core
except ImportError:  # in-tree build: the module sits on PYTHONPATH
    from _wavefp import *  # noqa: F401,F403
    import _wavefp as _core

__version__ = _core.__version__
