#pragma once

#include <span>
#include <string>
#include <vector>

#include "wavefp/pipeline.hpp"

namespace wavefp {

// How a probe-vs-finger distance aggregates over the finger's enrolled
// templates. `min` is the default multi-template rule.
enum class Aggregation { min, mean, median };

const char* to_string(Aggregation a);
Aggregation aggregation_from_string(const std::string& name);

// sqrt(sum (a_i - b_i)^2); lengths must agree.
double euclidean(std::span<const double> a, std::span<const double> b);

struct MatchDecision {
    double distance = 0;
    bool matched = false;  // distance <= threshold
    double threshold = 0;
    int best_sample_id = 0;  // enrolled sample closest to the probe
};

// Compares the probe against the claimed finger's enrolled templates.
// Requires the probe's config_hash to match the store's.
MatchDecision verify(const Template& probe, int claimed_finger, const TemplateStore& store,
                     double threshold, Aggregation aggregation = Aggregation::min);

struct IdentifyEntry {
    int finger_id = 0;
    double distance = 0;
    bool matched = false;
};

// All enrolled fingers ranked by aggregated distance, ascending (ties break
// by finger id). Entries at or under the threshold are flagged.
std::vector<IdentifyEntry> identify(const Template& probe, const TemplateStore& store,
                                    double threshold, Aggregation aggregation = Aggregation::min);

}  // namespace wavefp
