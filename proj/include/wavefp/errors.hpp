#pragma once

#include <stdexcept>

namespace wavefp {

// Base class of every error the toolkit throws on its own behalf.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// image and dataset ingestion
struct FileNotFound : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct CorruptHeader : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };
struct MalformedFilename : Error { using Error::Error; };

// transforms and feature extraction
struct EmptyInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ImageTooSmall : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };
struct NoPairs : Error { using Error::Error; };
struct BandTooSmall : Error { using Error::Error; };
struct PlaneTooSmall : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };

// templates, matching and evaluation
struct IoFailure : Error { using Error::Error; };
struct SchemaMismatch : Error { using Error::Error; };
struct ConfigHashMissing : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct UnknownFinger : Error { using Error::Error; };
struct ConfigMismatch : Error { using Error::Error; };
struct OverlapError : Error { using Error::Error; };

}  // namespace wavefp
