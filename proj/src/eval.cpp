#include "wavefp/eval.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

std::string fmt_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

void check_impostors_disjoint(const TemplateStore& store, const std::vector<Template>& impostors) {
    for (const Template& t : impostors) {
        if (store.by_finger.count(t.finger_id))
            throw OverlapError("impostor finger " + std::to_string(t.finger_id) +
                               " is present in the store");
    }
}

std::size_t count_at_or_under(const std::vector<double>& distances, double threshold) {
    std::size_t n = 0;
    for (double d : distances)
        if (d <= threshold) ++n;
    return n;
}

}  // namespace

const char* to_string(ImpostorAssignment a) {
    return a == ImpostorAssignment::round_robin ? "round_robin" : "seeded_random";
}

ImpostorAssignment impostor_assignment_from_string(const std::string& name) {
    if (name == "round_robin") return ImpostorAssignment::round_robin;
    if (name == "seeded_random") return ImpostorAssignment::seeded_random;
    throw InvalidConfig("unknown impostor assignment '" + name +
                        "' (expected round_robin or seeded_random)");
}

std::vector<int> assign_claims(std::size_t probe_count, const std::vector<int>& enrolled_fingers) {
    if (enrolled_fingers.empty()) throw EmptyDataset("assign_claims: no enrolled fingers");
    std::vector<int> claims(probe_count);
    for (std::size_t k = 0; k < probe_count; ++k)
        claims[k] = enrolled_fingers[k % enrolled_fingers.size()];
    return claims;
}

std::vector<int> assign_claims_random(std::size_t probe_count,
                                      const std::vector<int>& enrolled_fingers, std::uint64_t seed) {
    if (enrolled_fingers.empty()) throw EmptyDataset("assign_claims_random: no enrolled fingers");
    std::mt19937_64 rng(seed);
    std::vector<int> claims(probe_count);
    for (std::size_t k = 0; k < probe_count; ++k)
        claims[k] = enrolled_fingers[static_cast<std::size_t>(rng() % enrolled_fingers.size())];
    return claims;
}

std::vector<double> genuine_distances(const TemplateStore& store,
                                      const std::vector<Template>& genuine_probes,
                                      Aggregation aggregation) {
    std::vector<double> out;
    out.reserve(genuine_probes.size());
    for (const Template& probe : genuine_probes) {
        // verify() checks config hash and finger existence; any threshold works
        out.push_back(verify(probe, probe.finger_id, store, 0.0, aggregation).distance);
    }
    return out;
}

std::vector<double> impostor_distances(const TemplateStore& store,
                                       const std::vector<Template>& impostor_probes,
                                       const std::vector<int>& claims, Aggregation aggregation) {
    if (claims.size() != impostor_probes.size())
        throw LengthMismatch("impostor claim assignment does not cover every probe");
    check_impostors_disjoint(store, impostor_probes);
    std::vector<double> out;
    out.reserve(impostor_probes.size());
    for (std::size_t k = 0; k < impostor_probes.size(); ++k)
        out.push_back(verify(impostor_probes[k], claims[k], store, 0.0, aggregation).distance);
    return out;
}

GenuineCounts genuine_trials(const TemplateStore& store,
                             const std::vector<Template>& genuine_probes, double threshold,
                             Aggregation aggregation) {
    const std::vector<double> d = genuine_distances(store, genuine_probes, aggregation);
    GenuineCounts counts;
    counts.mc = count_at_or_under(d, threshold);
    counts.mmc = d.size() - counts.mc;
    return counts;
}

std::size_t impostor_trials(const TemplateStore& store,
                            const std::vector<Template>& impostor_probes, double threshold,
                            const SweepOptions& options) {
    const std::vector<int> claims =
        options.assignment == ImpostorAssignment::round_robin
            ? assign_claims(impostor_probes.size(), store.finger_ids())
            : assign_claims_random(impostor_probes.size(), store.finger_ids(), options.seed);
    return count_at_or_under(impostor_distances(store, impostor_probes, claims, options.aggregation),
                             threshold);
}

EvalReport sweep(const TemplateStore& store, const std::vector<Template>& genuine_probes,
                 const std::vector<Template>& impostor_probes,
                 const std::vector<double>& thresholds, const SweepOptions& options) {
    if (thresholds.empty()) throw BadRange("sweep: no thresholds");
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (!(thresholds[i - 1] < thresholds[i]))
            throw BadRange("sweep: thresholds must be strictly increasing");

    const std::vector<double> genuine = genuine_distances(store, genuine_probes, options.aggregation);
    const std::vector<int> claims =
        options.assignment == ImpostorAssignment::round_robin
            ? assign_claims(impostor_probes.size(), store.finger_ids())
            : assign_claims_random(impostor_probes.size(), store.finger_ids(), options.seed);
    const std::vector<double> impostor =
        impostor_distances(store, impostor_probes, claims, options.aggregation);

    EvalReport report;
    report.metadata.enrolled_fingers = store.by_finger.size();
    report.metadata.enrolled_templates = store.size();
    report.metadata.genuine_trials = genuine.size();
    report.metadata.impostor_trials = impostor.size();
    report.metadata.config_hash = store.config_hash;
    report.metadata.config_json = config_to_json_text(store.config);
    report.metadata.aggregation = to_string(options.aggregation);
    report.metadata.assignment = to_string(options.assignment);
    report.metadata.seed = options.seed;

    report.rows.reserve(thresholds.size());
    for (double t : thresholds) {
        EvalRow row;
        row.threshold = t;
        row.mc = count_at_or_under(genuine, t);
        row.mmc = genuine.size() - row.mc;
        const std::size_t imc = count_at_or_under(impostor, t);
        row.far_pct = impostor.empty() ? 0.0
                                       : 100.0 * static_cast<double>(imc) /
                                             static_cast<double>(impostor.size());
        row.frr_pct = genuine.empty() ? 0.0
                                      : 100.0 * static_cast<double>(row.mmc) /
                                            static_cast<double>(genuine.size());
        row.tsr_pct = genuine.empty() ? 0.0
                                      : 100.0 * static_cast<double>(row.mc) /
                                            static_cast<double>(genuine.size());
        report.rows.push_back(row);
    }

    // EER: linear interpolation where the FAR and FRR curves cross
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const double d0 = report.rows[i].far_pct - report.rows[i].frr_pct;
        if (d0 == 0.0) {
            report.eer_defined = true;
            report.eer_pct = report.rows[i].far_pct;
            report.eer_threshold = report.rows[i].threshold;
            break;
        }
        if (i + 1 < report.rows.size()) {
            const double d1 = report.rows[i + 1].far_pct - report.rows[i + 1].frr_pct;
            if (d0 < 0.0 && d1 >= 0.0) {
                const double alpha = d0 / (d0 - d1);
                report.eer_defined = true;
                report.eer_threshold =
                    report.rows[i].threshold +
                    alpha * (report.rows[i + 1].threshold - report.rows[i].threshold);
                report.eer_pct = report.rows[i].far_pct +
                                 alpha * (report.rows[i + 1].far_pct - report.rows[i].far_pct);
                break;
            }
        }
    }
    return report;
}

std::string to_csv(const EvalReport& report) {
    std::string out = "threshold,far,frr,tsr,mc,mmc\n";
    for (const EvalRow& row : report.rows) {
        out += fmt_double(row.threshold);
        out += ',';
        out += fmt_double(row.far_pct);
        out += ',';
        out += fmt_double(row.frr_pct);
        out += ',';
        out += fmt_double(row.tsr_pct);
        out += ',';
        out += std::to_string(row.mc);
        out += ',';
        out += std::to_string(row.mmc);
        out += '\n';
    }
    return out;
}

void write_csv(const EvalReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << to_csv(report);
    if (!out) throw IoFailure("short write: " + path.string());
}

std::string to_json_text(const EvalReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const EvalRow& r : report.rows) {
        rows.push_back({{"threshold", r.threshold},
                        {"far_pct", r.far_pct},
                        {"frr_pct", r.frr_pct},
                        {"tsr_pct", r.tsr_pct},
                        {"mc", r.mc},
                        {"mmc", r.mmc}});
    }
    nlohmann::json j{
        {"schema_version", kTemplateSchemaVersion},
        {"metadata",
         {{"enrolled_fingers", report.metadata.enrolled_fingers},
          {"enrolled_templates", report.metadata.enrolled_templates},
          {"genuine_trials", report.metadata.genuine_trials},
          {"impostor_trials", report.metadata.impostor_trials},
          {"config_hash", report.metadata.config_hash},
          {"config", nlohmann::json::parse(report.metadata.config_json)},
          {"aggregation", report.metadata.aggregation},
          {"assignment", report.metadata.assignment},
          {"seed", report.metadata.seed}}},
        {"rows", std::move(rows)},
        {"eer", {{"defined", report.eer_defined}, {"percent", report.eer_pct}, {"threshold", report.eer_threshold}}},
    };
    return j.dump(2) + "\n";
}

void write_json(const EvalReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << to_json_text(report);
    if (!out) throw IoFailure("short write: " + path.string());
}

const BaselineTriple& amfauw_baseline() {
    static const BaselineTriple baseline{"AMFAUW", 5.91, 6.14, 94.09};
    return baseline;
}

std::optional<BaselineTriple> named_baseline(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "amfauw") return amfauw_baseline();
    return std::nullopt;
}

std::vector<ComparisonRow> compare_report(const EvalReport& report, std::size_t operating_row,
                                          const BaselineTriple& baseline) {
    if (operating_row >= report.rows.size())
        throw BadRange("compare_report: operating row out of range");
    const EvalRow& row = report.rows[operating_row];
    return {
        {baseline.name, baseline.far_pct, baseline.frr_pct, baseline.tsr_pct},
        {"wavefp", row.far_pct, row.frr_pct, row.tsr_pct},
    };
}

ProtocolRunResult run_protocol(const std::filesystem::path& gallery_dir,
                               const std::filesystem::path& impostor_dir,
                               const ExtractionConfig& cfg, const std::vector<double>& thresholds,
                               const SweepOptions& options, const std::string& naming,
                               const ProgressFn& progress) {
    const DatasetSplit split = scan_dataset(gallery_dir, impostor_dir, naming);
    EnrollResult enrolled = enroll_database(split.enroll, cfg, progress);

    ProtocolRunResult result;
    result.failures = std::move(enrolled.failures);
    result.enrolled = enrolled.store.size();

    auto extract_probes = [&](const std::vector<DatasetEntry>& entries) {
        std::vector<Template> probes;
        probes.reserve(entries.size());
        for (const DatasetEntry& e : entries) {
            try {
                probes.push_back(extract_template(e, cfg));
            } catch (const Error& err) {
                result.failures.push_back({e.path.string(), err.what()});
            }
        }
        return probes;
    };
    const std::vector<Template> genuine = extract_probes(split.genuine_test);
    const std::vector<Template> impostor = extract_probes(split.impostor_test);

    result.report = sweep(enrolled.store, genuine, impostor, thresholds, options);
    return result;
}

}  // namespace wavefp
