// wavefp — non-minutiae fingerprint verification from wavelet sub-band
// texture features. Subcommands: enroll, verify, identify, evaluate, synth.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wavefp/errors.hpp"
#include "wavefp/eval.hpp"
#include "wavefp/matcher.hpp"
#include "wavefp/pipeline.hpp"
#include "wavefp/synth.hpp"

namespace fs = std::filesystem;
using namespace wavefp;

namespace {

// Config file first, explicit flags on top.
struct ConfigFlags {
    std::optional<std::string> config_path;
    std::optional<std::string> wavelet;
    std::optional<std::string> dwt_mode;
    std::optional<int> glcm_levels;
    std::optional<std::vector<int>> glcm_offset;
    std::optional<bool> glcm_symmetric;
    std::optional<double> canny_sigma, canny_t_low, canny_t_high;
    std::optional<bool> swap_axes;
    std::optional<bool> normalize;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--config", config_path, "JSON config file")->envname("WAVEFP_CONFIG");
        cmd.add_option("--wavelet", wavelet, "db1 | db2 | db4")->envname("WAVEFP_WAVELET");
        cmd.add_option("--dwt-mode", dwt_mode, "symmetric | periodic")->envname("WAVEFP_DWT_MODE");
        cmd.add_option("--glcm-levels", glcm_levels, "GLCM quantization levels");
        cmd.add_option("--glcm-offset", glcm_offset, "GLCM offset as dy dx")->expected(2);
        cmd.add_option("--glcm-symmetric", glcm_symmetric, "count pairs in both directions");
        cmd.add_option("--canny-sigma", canny_sigma, "Gaussian std-dev");
        cmd.add_option("--canny-tlow", canny_t_low, "weak threshold fraction");
        cmd.add_option("--canny-thigh", canny_t_high, "strong threshold fraction");
        cmd.add_option("--swap-axes", swap_axes, "swap the HL/LH gradient roles");
        cmd.add_option("--normalize", normalize, "z-score features at match time");
    }

    ExtractionConfig resolve() const {
        ExtractionConfig cfg =
            config_path ? load_config_file(*config_path) : ExtractionConfig{};
        if (wavelet) cfg.dwt.wavelet = *wavelet;
        if (dwt_mode) cfg.dwt.mode = extension_mode_from_string(*dwt_mode);
        if (glcm_levels) cfg.glcm.levels = *glcm_levels;
        if (glcm_offset) {
            cfg.glcm.offset_dy = (*glcm_offset)[0];
            cfg.glcm.offset_dx = (*glcm_offset)[1];
        }
        if (glcm_symmetric) cfg.glcm.symmetric = *glcm_symmetric;
        if (canny_sigma) cfg.canny.sigma = *canny_sigma;
        if (canny_t_low) cfg.canny.t_low = *canny_t_low;
        if (canny_t_high) cfg.canny.t_high = *canny_t_high;
        if (swap_axes) cfg.orientation.swap_axes = *swap_axes;
        if (normalize) cfg.normalize = *normalize;
        Wavelet::from_name(cfg.dwt.wavelet);  // validate early
        return cfg;
    }
};

std::vector<double> parse_thresholds(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream is(spec);
        if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) || hi < lo)
            throw InvalidConfig("bad thresholds spec '" + spec + "' (expected lo:hi:step)");
        for (double t = lo; t <= hi + 1e-9 * step; t += step) out.push_back(t);
        return out;
    }
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw InvalidConfig("no thresholds in '" + spec + "'");
    return out;
}

int cmd_enroll(const std::string& data_dir, const std::string& store_dir,
               const ConfigFlags& flags, const std::string& pattern) {
    const ExtractionConfig cfg = flags.resolve();
    const DatasetSplit split = scan_dataset(data_dir, {}, pattern);
    const EnrollResult result = enroll_database(split.enroll, cfg);
    for (const EnrollFailure& f : result.failures)
        std::cerr << "warning: " << f.path << ": " << f.message << "\n";
    save_store(result.store, store_dir);
    std::cout << "enrolled " << result.store.size() << " templates, " << result.failures.size()
              << " failures\n";
    return 0;
}

int cmd_verify(const std::string& image_path, int claimed_finger, const std::string& store_dir,
               double threshold, Aggregation aggregation) {
    const TemplateStore store = load_store(store_dir);
    Template probe;
    probe.finger_id = claimed_finger;
    probe.features = extract(load_image(image_path), store.config);
    probe.config_hash = store.config_hash;
    probe.source_path = image_path;
    const MatchDecision d = verify(probe, claimed_finger, store, threshold, aggregation);
    std::cout << "distance=" << d.distance << " threshold=" << d.threshold << " best_sample="
              << d.best_sample_id << " " << (d.matched ? "MATCH" : "NO-MATCH") << "\n";
    return d.matched ? 0 : 1;
}

int cmd_identify(const std::string& image_path, const std::string& store_dir, double threshold,
                 std::size_t top, Aggregation aggregation) {
    const TemplateStore store = load_store(store_dir);
    Template probe;
    probe.features = extract(load_image(image_path), store.config);
    probe.config_hash = store.config_hash;
    probe.source_path = image_path;
    const std::vector<IdentifyEntry> ranked = identify(probe, store, threshold, aggregation);
    for (std::size_t i = 0; i < ranked.size() && i < top; ++i) {
        std::cout << (i + 1) << ". finger=" << ranked[i].finger_id
                  << " distance=" << ranked[i].distance << (ranked[i].matched ? " match" : "")
                  << "\n";
    }
    return 0;
}

int cmd_evaluate(const std::string& data_dir, const std::string& impostor_dir,
                 const std::string& out_prefix, const std::string& thresholds_spec,
                 const ConfigFlags& flags, const std::string& pattern, const SweepOptions& options,
                 const std::optional<std::string>& compare_baseline) {
    const ExtractionConfig cfg = flags.resolve();
    const std::vector<double> thresholds = parse_thresholds(thresholds_spec);
    const ProtocolRunResult run =
        run_protocol(data_dir, impostor_dir, cfg, thresholds, options, pattern);
    for (const EnrollFailure& f : run.failures)
        std::cerr << "warning: " << f.path << ": " << f.message << "\n";

    const fs::path csv_path = out_prefix + ".csv";
    const fs::path json_path = out_prefix + ".json";
    write_csv(run.report, csv_path);
    write_json(run.report, json_path);

    std::cout << "enrolled " << run.enrolled << " templates, " << run.failures.size()
              << " failures\n";
    std::cout << "report: " << csv_path.string() << ", " << json_path.string() << "\n";
    if (run.report.eer_defined)
        std::cout << "EER=" << run.report.eer_pct << "% @ t=" << run.report.eer_threshold << "\n";
    else
        std::cout << "EER=undefined (no FAR/FRR crossing inside the sweep)\n";

    if (compare_baseline) {
        const auto baseline = named_baseline(*compare_baseline);
        if (!baseline) throw InvalidConfig("unknown baseline '" + *compare_baseline + "'");
        // operating point: the row where |FAR - FRR| is smallest
        std::size_t best = 0;
        for (std::size_t i = 1; i < run.report.rows.size(); ++i) {
            const auto gap = [&](std::size_t k) {
                return std::abs(run.report.rows[k].far_pct - run.report.rows[k].frr_pct);
            };
            if (gap(i) < gap(best)) best = i;
        }
        std::cout << "method,far,frr,tsr\n";
        for (const ComparisonRow& row : compare_report(run.report, best, *baseline))
            std::cout << row.method << "," << row.far_pct << "," << row.frr_pct << ","
                      << row.tsr_pct << "\n";
    }
    return 0;
}

int cmd_synth(const std::string& out_dir, int fingers, int samples, const CorpusParams& params) {
    generate_corpus(out_dir, fingers, samples, params);
    std::cout << "wrote " << fingers * samples << " images to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavefp — non-minutiae fingerprint verification toolkit"};
    app.require_subcommand(1);

    // enroll
    auto* enroll = app.add_subcommand("enroll", "extract and store templates for a dataset");
    std::string enroll_data, enroll_store, enroll_pattern = kDefaultNamingPattern;
    ConfigFlags enroll_cfg;
    enroll->add_option("--data", enroll_data, "dataset directory")->required()->envname("WAVEFP_DATA");
    enroll->add_option("--store", enroll_store, "output template store directory")
        ->required()
        ->envname("WAVEFP_STORE");
    enroll->add_option("--pattern", enroll_pattern, "filename pattern, default {finger}_{sample}");
    enroll_cfg.add_to(*enroll);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "one-to-one comparison against a claimed finger");
    std::string verify_image, verify_store, verify_agg = "min";
    int verify_finger = 0;
    double verify_threshold = 0.0;
    verify_cmd->add_option("--image", verify_image, "probe image")->required();
    verify_cmd->add_option("--finger", verify_finger, "claimed finger id")->required();
    verify_cmd->add_option("--store", verify_store, "template store directory")
        ->required()
        ->envname("WAVEFP_STORE");
    verify_cmd->add_option("--threshold", verify_threshold, "decision threshold")
        ->required()
        ->envname("WAVEFP_THRESHOLD");
    verify_cmd->add_option("--aggregation", verify_agg, "min | mean | median");

    // identify
    auto* identify_cmd = app.add_subcommand("identify", "one-to-many ranking over the store");
    std::string identify_image, identify_store, identify_agg = "min";
    double identify_threshold = 0.0;
    std::size_t identify_top = 10;
    identify_cmd->add_option("--image", identify_image, "probe image")->required();
    identify_cmd->add_option("--store", identify_store, "template store directory")
        ->required()
        ->envname("WAVEFP_STORE");
    identify_cmd->add_option("--threshold", identify_threshold, "match flag threshold")
        ->envname("WAVEFP_THRESHOLD");
    identify_cmd->add_option("--top", identify_top, "print at most N entries");
    identify_cmd->add_option("--aggregation", identify_agg, "min | mean | median");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "threshold sweep producing FAR/FRR/TSR and EER");
    std::string eval_data, eval_impostors, eval_out, eval_thresholds, eval_pattern = kDefaultNamingPattern;
    std::string eval_agg = "min", eval_assignment = "round_robin";
    std::optional<std::string> eval_compare;
    std::uint64_t eval_seed = 0;
    ConfigFlags eval_cfg;
    evaluate->add_option("--data", eval_data, "gallery dataset directory")->required()->envname("WAVEFP_DATA");
    evaluate->add_option("--impostors", eval_impostors, "impostor dataset directory")->required();
    evaluate->add_option("--out", eval_out, "report path prefix (.csv/.json appended)")
        ->required()
        ->envname("WAVEFP_OUT");
    evaluate->add_option("--thresholds", eval_thresholds, "lo:hi:step or comma list")->required();
    evaluate->add_option("--pattern", eval_pattern, "filename pattern");
    evaluate->add_option("--aggregation", eval_agg, "min | mean | median");
    evaluate->add_option("--assignment", eval_assignment, "round_robin | seeded_random");
    evaluate->add_option("--seed", eval_seed, "seed for seeded_random assignment")->envname("WAVEFP_SEED");
    evaluate->add_option("--compare", eval_compare, "print a baseline comparison (amfauw)");
    eval_cfg.add_to(*evaluate);

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic ridge-pattern corpus");
    std::string synth_out;
    int synth_fingers = 10, synth_samples = 8;
    CorpusParams synth_params;
    synth->add_option("--out", synth_out, "output directory")->required()->envname("WAVEFP_OUT");
    synth->add_option("--fingers", synth_fingers, "number of fingers");
    synth->add_option("--samples", synth_samples, "samples per finger");
    synth->add_option("--width", synth_params.width, "image width");
    synth->add_option("--height", synth_params.height, "image height");
    synth->add_option("--noise", synth_params.noise_sigma, "Gaussian noise std-dev");
    synth->add_option("--seed", synth_params.seed, "corpus seed")->envname("WAVEFP_SEED");
    synth->add_option("--first-finger", synth_params.first_finger, "id of the first finger");
    synth->add_option("--freq-lo", synth_params.freq_lo, "ridge frequency range low");
    synth->add_option("--freq-hi", synth_params.freq_hi, "ridge frequency range high");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0; usage errors exit 2
    }

    try {
        if (enroll->parsed()) return cmd_enroll(enroll_data, enroll_store, enroll_cfg, enroll_pattern);
        if (verify_cmd->parsed())
            return cmd_verify(verify_image, verify_finger, verify_store, verify_threshold,
                              aggregation_from_string(verify_agg));
        if (identify_cmd->parsed())
            return cmd_identify(identify_image, identify_store, identify_threshold, identify_top,
                                aggregation_from_string(identify_agg));
        if (evaluate->parsed()) {
            SweepOptions options;
            options.aggregation = aggregation_from_string(eval_agg);
            options.assignment = impostor_assignment_from_string(eval_assignment);
            options.seed = eval_seed;
            return cmd_evaluate(eval_data, eval_impostors, eval_out, eval_thresholds, eval_cfg,
                                eval_pattern, options, eval_compare);
        }
        if (synth->parsed()) return cmd_synth(synth_out, synth_fingers, synth_samples, synth_params);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
