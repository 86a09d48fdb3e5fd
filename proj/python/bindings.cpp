// Python bindings for the wavefp core: numpy arrays in, numpy arrays out.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstring>

#include "wavefp/canny.hpp"
#include "wavefp/centerarea.hpp"
#include "wavefp/config.hpp"
#include "wavefp/dwt.hpp"
#include "wavefp/errors.hpp"
#include "wavefp/eval.hpp"
#include "wavefp/glcm.hpp"
#include "wavefp/matcher.hpp"
#include "wavefp/orientation.hpp"
#include "wavefp/pipeline.hpp"
#include "wavefp/synth.hpp"

namespace py = pybind11;
using namespace wavefp;

namespace {

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const DoubleArray& a) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
    Matrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::memcpy(m.data().data(), a.data(), sizeof(double) * m.size());
    return m;
}

py::array_t<double> to_array(const Matrix& m) {
    py::array_t<double> a({m.rows(), m.cols()});
    std::memcpy(a.mutable_data(), m.data().data(), sizeof(double) * m.size());
    return a;
}

py::array_t<double> to_array_1d(const std::vector<double>& v) {
    py::array_t<double> a(v.size());
    std::memcpy(a.mutable_data(), v.data(), sizeof(double) * v.size());
    return a;
}

std::vector<double> to_vector(const DoubleArray& a) {
    if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
    return std::vector<double>(a.data(), a.data() + a.shape(0));
}

py::dict subbands_to_dict(const SubbandSet& s) {
    py::dict d;
    d["level"] = s.level;
    d["ll"] = to_array(s.ll);
    d["lh"] = to_array(s.lh);
    d["hl"] = to_array(s.hl);
    d["hh"] = to_array(s.hh);
    return d;
}

py::dict report_to_dict(const EvalReport& report) {
    py::list rows;
    for (const EvalRow& r : report.rows) {
        py::dict row;
        row["threshold"] = r.threshold;
        row["far_pct"] = r.far_pct;
        row["frr_pct"] = r.frr_pct;
        row["tsr_pct"] = r.tsr_pct;
        row["mc"] = r.mc;
        row["mmc"] = r.mmc;
        rows.append(row);
    }
    py::dict meta;
    meta["enrolled_fingers"] = report.metadata.enrolled_fingers;
    meta["enrolled_templates"] = report.metadata.enrolled_templates;
    meta["genuine_trials"] = report.metadata.genuine_trials;
    meta["impostor_trials"] = report.metadata.impostor_trials;
    meta["config_hash"] = report.metadata.config_hash;
    meta["aggregation"] = report.metadata.aggregation;
    meta["assignment"] = report.metadata.assignment;
    meta["seed"] = report.metadata.seed;
    py::dict d;
    d["rows"] = rows;
    d["eer_defined"] = report.eer_defined;
    d["eer_pct"] = report.eer_pct;
    d["eer_threshold"] = report.eer_threshold;
    d["metadata"] = meta;
    return d;
}

}  // namespace

PYBIND11_MODULE(_wavefp, m) {
    m.doc() = "Non-minutiae fingerprint verification: wavelet sub-band texture features, "
              "Euclidean matching and FAR/FRR/EER evaluation";
    m.attr("__version__") = "0.1.0";
    m.attr("FEATURE_COUNT") = kFeatureCount;

    py::register_exception<Error>(m, "WavefpError", PyExc_RuntimeError);

    py::class_<GlcmConfig>(m, "GlcmConfig")
        .def(py::init<>())
        .def_readwrite("levels", &GlcmConfig::levels)
        .def_readwrite("offset_dy", &GlcmConfig::offset_dy)
        .def_readwrite("offset_dx", &GlcmConfig::offset_dx)
        .def_readwrite("symmetric", &GlcmConfig::symmetric);

    py::class_<CannyConfig>(m, "CannyConfig")
        .def(py::init<>())
        .def_readwrite("sigma", &CannyConfig::sigma)
        .def_readwrite("t_low", &CannyConfig::t_low)
        .def_readwrite("t_high", &CannyConfig::t_high);

    py::class_<ExtractionConfig>(m, "ExtractionConfig")
        .def(py::init<>())
        .def_property(
            "wavelet", [](const ExtractionConfig& c) { return c.dwt.wavelet; },
            [](ExtractionConfig& c, const std::string& v) { c.dwt.wavelet = v; })
        .def_property(
            "dwt_mode", [](const ExtractionConfig& c) { return std::string(to_string(c.dwt.mode)); },
            [](ExtractionConfig& c, const std::string& v) { c.dwt.mode = extension_mode_from_string(v); })
        .def_readwrite("glcm", &ExtractionConfig::glcm)
        .def_readwrite("canny", &ExtractionConfig::canny)
        .def_property(
            "swap_axes", [](const ExtractionConfig& c) { return c.orientation.swap_axes; },
            [](ExtractionConfig& c, bool v) { c.orientation.swap_axes = v; })
        .def_readwrite("normalize", &ExtractionConfig::normalize)
        .def("config_hash", &ExtractionConfig::config_hash)
        .def("to_json", &config_to_json_text)
        .def_static("from_json", &config_from_json_text);

    m.def("load_config", &load_config_file, py::arg("path"));

    m.def(
        "load_image",
        [](const std::filesystem::path& path) { return to_array(load_image(path).pixels); },
        py::arg("path"), "Load a PGM/PNG image as a 2-D float64 array in [0, 255]");
    m.def(
        "save_pgm",
        [](const DoubleArray& pixels, const std::filesystem::path& path) {
            GrayImage img;
            img.pixels = to_matrix(pixels);
            save_pgm(img, path);
        },
        py::arg("pixels"), py::arg("path"));

    m.def(
        "dwt2",
        [](const DoubleArray& image, const std::string& wavelet, const std::string& mode) {
            return subbands_to_dict(dwt2_single(to_matrix(image), Wavelet::from_name(wavelet),
                                                extension_mode_from_string(mode)));
        },
        py::arg("image"), py::arg("wavelet") = "db2", py::arg("mode") = "symmetric",
        "Single-level 2-D DWT; returns {'ll','lh','hl','hh'} planes");
    m.def(
        "idwt2",
        [](const DoubleArray& ll, const DoubleArray& lh, const DoubleArray& hl,
           const DoubleArray& hh, std::size_t width, std::size_t height,
           const std::string& wavelet, const std::string& mode) {
            SubbandSet bands;
            bands.ll = to_matrix(ll);
            bands.lh = to_matrix(lh);
            bands.hl = to_matrix(hl);
            bands.hh = to_matrix(hh);
            return to_array(idwt2_single(bands, Wavelet::from_name(wavelet), width, height,
                                         extension_mode_from_string(mode)));
        },
        py::arg("ll"), py::arg("lh"), py::arg("hl"), py::arg("hh"), py::arg("width"),
        py::arg("height"), py::arg("wavelet") = "db2", py::arg("mode") = "symmetric");
    m.def(
        "decompose3",
        [](const DoubleArray& image, const std::string& wavelet, const std::string& mode) {
            GrayImage img;
            img.pixels = to_matrix(image);
            const SubbandPyramid pyr =
                decompose3(img, Wavelet::from_name(wavelet), extension_mode_from_string(mode));
            py::list levels;
            for (const SubbandSet& s : pyr.levels) levels.append(subbands_to_dict(s));
            return levels;
        },
        py::arg("image"), py::arg("wavelet") = "db2", py::arg("mode") = "symmetric");

    m.def(
        "glcm_features",
        [](const DoubleArray& plane, double lo, double hi, const GlcmConfig& cfg) {
            const TextureFeatures f = features_of_plane(to_matrix(plane), lo, hi, cfg);
            py::dict d;
            d["correlation"] = f.correlation;
            d["contrast"] = f.contrast;
            d["energy"] = f.energy;
            d["homogeneity"] = f.homogeneity;
            return d;
        },
        py::arg("plane"), py::arg("lo"), py::arg("hi"), py::arg("cfg") = GlcmConfig{},
        "GLCM texture statistics of a plane quantized over [lo, hi]");

    m.def(
        "canny",
        [](const DoubleArray& plane, const CannyConfig& cfg) {
            const EdgeMap em = canny(to_matrix(plane), cfg);
            py::array_t<std::uint8_t> mask({em.rows, em.cols});
            std::memcpy(mask.mutable_data(), em.mask.data(), em.mask.size());
            py::dict d;
            d["mask"] = mask;
            d["grad_mag"] = to_array(em.grad_mag);
            return d;
        },
        py::arg("plane"), py::arg("cfg") = CannyConfig{});

    m.def(
        "extract",
        [](const DoubleArray& image, const ExtractionConfig& cfg) {
            GrayImage img;
            img.pixels = to_matrix(image);
            return to_array_1d(extract(img, cfg));
        },
        py::arg("image"), py::arg("cfg") = ExtractionConfig{},
        "96-value feature vector of an image array");

    m.def(
        "euclidean",
        [](const DoubleArray& a, const DoubleArray& b) {
            const std::vector<double> va = to_vector(a), vb = to_vector(b);
            return euclidean(va, vb);
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "render_fingerprint",
        [](std::size_t width, std::size_t height, double frequency, double angle,
           double noise_sigma, std::uint64_t seed, int dx, int dy) {
            SynthParams p;
            p.width = width;
            p.height = height;
            p.ridge_frequency = frequency;
            p.global_angle = angle;
            p.noise_sigma = noise_sigma;
            p.seed = seed;
            p.dx = dx;
            p.dy = dy;
            return to_array(render_fingerprint(p).pixels);
        },
        py::arg("width") = 160, py::arg("height") = 160, py::arg("frequency") = 0.12,
        py::arg("angle") = 0.0, py::arg("noise_sigma") = 0.0, py::arg("seed") = 0,
        py::arg("dx") = 0, py::arg("dy") = 0);

    m.def(
        "synth_corpus",
        [](const std::filesystem::path& out_dir, int fingers, int samples, std::size_t width,
           std::size_t height, double noise_sigma, std::uint64_t seed, int first_finger) {
            CorpusParams p;
            p.width = width;
            p.height = height;
            p.noise_sigma = noise_sigma;
            p.seed = seed;
            p.first_finger = first_finger;
            generate_corpus(out_dir, fingers, samples, p);
        },
        py::arg("out_dir"), py::arg("fingers"), py::arg("samples"), py::arg("width") = 160,
        py::arg("height") = 160, py::arg("noise_sigma") = 6.0, py::arg("seed") = 1,
        py::arg("first_finger") = 1);

    m.def(
        "enroll",
        [](const std::filesystem::path& data_dir, const std::filesystem::path& store_dir,
           const ExtractionConfig& cfg, const std::string& pattern) {
            const DatasetSplit split = scan_dataset(data_dir, {}, pattern);
            const EnrollResult result = enroll_database(split.enroll, cfg);
            save_store(result.store, store_dir);
            py::dict d;
            d["enrolled"] = result.store.size();
            d["failures"] = result.failures.size();
            return d;
        },
        py::arg("data_dir"), py::arg("store_dir"), py::arg("cfg") = ExtractionConfig{},
        py::arg("pattern") = std::string(kDefaultNamingPattern));

    m.def(
        "verify",
        [](const std::filesystem::path& store_dir, const std::filesystem::path& image_path,
           int claimed_finger, double threshold, const std::string& aggregation) {
            const TemplateStore store = load_store(store_dir);
            Template probe;
            probe.finger_id = claimed_finger;
            probe.features = extract(load_image(image_path), store.config);
            probe.config_hash = store.config_hash;
            const MatchDecision md = verify(probe, claimed_finger, store, threshold,
                                            aggregation_from_string(aggregation));
            py::dict d;
            d["distance"] = md.distance;
            d["matched"] = md.matched;
            d["threshold"] = md.threshold;
            d["best_sample_id"] = md.best_sample_id;
            return d;
        },
        py::arg("store_dir"), py::arg("image"), py::arg("finger"), py::arg("threshold"),
        py::arg("aggregation") = "min");

    m.def(
        "evaluate",
        [](const std::filesystem::path& data_dir, const std::filesystem::path& impostor_dir,
           const std::vector<double>& thresholds, const ExtractionConfig& cfg,
           const std::string& aggregation, const std::string& assignment, std::uint64_t seed,
           const std::string& pattern) {
            SweepOptions options;
            options.aggregation = aggregation_from_string(aggregation);
            options.assignment = impostor_assignment_from_string(assignment);
            options.seed = seed;
            const ProtocolRunResult run =
                run_protocol(data_dir, impostor_dir, cfg, thresholds, options, pattern);
            py::dict d = report_to_dict(run.report);
            d["enrolled"] = run.enrolled;
            d["failures"] = run.failures.size();
            return d;
        },
        py::arg("data_dir"), py::arg("impostor_dir"), py::arg("thresholds"),
        py::arg("cfg") = ExtractionConfig{}, py::arg("aggregation") = "min",
        py::arg("assignment") = "round_robin", py::arg("seed") = 0,
        py::arg("pattern") = std::string(kDefaultNamingPattern));
}
