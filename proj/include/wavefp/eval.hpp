#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wavefp/matcher.hpp"
#include "wavefp/pipeline.hpp"

namespace wavefp {

enum class ImpostorAssignment { round_robin, seeded_random };

const char* to_string(ImpostorAssignment a);
ImpostorAssignment impostor_assignment_from_string(const std::string& name);

struct SweepOptions {
    Aggregation aggregation = Aggregation::min;
    ImpostorAssignment assignment = ImpostorAssignment::round_robin;
    std::uint64_t seed = 0;  // used by seeded_random assignment
};

// Impostor probe k claims enrolled_fingers[k % NF].
std::vector<int> assign_claims(std::size_t probe_count, const std::vector<int>& enrolled_fingers);
std::vector<int> assign_claims_random(std::size_t probe_count,
                                      const std::vector<int>& enrolled_fingers, std::uint64_t seed);

// Per-probe aggregated distances; the sweep thresholds these once computed.
std::vector<double> genuine_distances(const TemplateStore& store,
                                      const std::vector<Template>& genuine_probes,
                                      Aggregation aggregation = Aggregation::min);
std::vector<double> impostor_distances(const TemplateStore& store,
                                       const std::vector<Template>& impostor_probes,
                                       const std::vector<int>& claims,
                                       Aggregation aggregation = Aggregation::min);

struct GenuineCounts {
    std::size_t mc = 0;   // genuine probes accepted
    std::size_t mmc = 0;  // genuine probes rejected; mc + mmc == probe count
};

// Each genuine probe is verified against its own finger.
GenuineCounts genuine_trials(const TemplateStore& store,
                             const std::vector<Template>& genuine_probes, double threshold,
                             Aggregation aggregation = Aggregation::min);

// Each impostor probe claims one enrolled identity (round-robin by default);
// returns the number of (false) acceptances. Raises OverlapError when an
// impostor finger is itself enrolled.
std::size_t impostor_trials(const TemplateStore& store,
                            const std::vector<Template>& impostor_probes, double threshold,
                            const SweepOptions& options = {});

struct EvalRow {
    double threshold = 0;
    double far_pct = 0;  // impostor acceptances / impostor trials * 100
    double frr_pct = 0;  // mmc / genuine trials * 100
    double tsr_pct = 0;  // mc / genuine trials * 100
    std::size_t mc = 0;
    std::size_t mmc = 0;
};

struct ProtocolMetadata {
    std::size_t enrolled_fingers = 0;
    std::size_t enrolled_templates = 0;
    std::size_t genuine_trials = 0;
    std::size_t impostor_trials = 0;
    std::string config_hash;
    std::string config_json;  // effective extraction config, echoed
    std::string aggregation;
    std::string assignment;
    std::uint64_t seed = 0;
};

struct EvalReport {
    std::vector<EvalRow> rows;  // ordered by threshold
    bool eer_defined = false;
    double eer_pct = 0;
    double eer_threshold = 0;
    ProtocolMetadata metadata;
};

// One row per threshold (strictly increasing); the EER is linearly
// interpolated at the FAR/FRR crossing when one lies inside the sweep.
EvalReport sweep(const TemplateStore& store, const std::vector<Template>& genuine_probes,
                 const std::vector<Template>& impostor_probes,
                 const std::vector<double>& thresholds, const SweepOptions& options = {});

// CSV columns: threshold,far,frr,tsr,mc,mmc. Number formatting is the
// shortest round-trip form, so equal runs serialize byte-identically.
std::string to_csv(const EvalReport& report);
void write_csv(const EvalReport& report, const std::filesystem::path& path);
std::string to_json_text(const EvalReport& report);
void write_json(const EvalReport& report, const std::filesystem::path& path);

struct BaselineTriple {
    std::string name;
    double far_pct = 0, frr_pct = 0, tsr_pct = 0;
};

// Built-in reference operating point of a published wavelet-domain method.
const BaselineTriple& amfauw_baseline();
std::optional<BaselineTriple> named_baseline(const std::string& name);

struct ComparisonRow {
    std::string method;
    double far_pct = 0, frr_pct = 0, tsr_pct = 0;
};

// Proposed-vs-baseline table at a selected operating row of the report.
std::vector<ComparisonRow> compare_report(const EvalReport& report, std::size_t operating_row,
                                          const BaselineTriple& baseline);

// Full protocol: scan gallery + impostor directories, enroll samples 1..7,
// probe with sample 8 and the impostor set, sweep the thresholds.
struct ProtocolRunResult {
    EvalReport report;
    std::size_t enrolled = 0;
    std::vector<EnrollFailure> failures;  // enrollment and probe extraction failures
};

ProtocolRunResult run_protocol(const std::filesystem::path& gallery_dir,
                               const std::filesystem::path& impostor_dir,
                               const ExtractionConfig& cfg, const std::vector<double>& thresholds,
                               const SweepOptions& options = {},
                               const std::string& naming = kDefaultNamingPattern,
                               const ProgressFn& progress = {});

}  // namespace wavefp
