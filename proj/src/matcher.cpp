#include "wavefp/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

// Distance under the store's settings: plain Euclidean, or z-scored when the
// store carries enrollment statistics. The means cancel, so z-scoring
// reduces to per-dimension division by std; zero-variance dimensions drop
// out.
double store_distance(const std::vector<double>& a, const std::vector<double>& b,
                      const TemplateStore& store) {
    if (a.size() != b.size())
        throw LengthMismatch("feature length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    if (!store.norm_std) return euclidean(a, b);
    const std::vector<double>& stdev = *store.norm_std;
    if (stdev.size() != a.size())
        throw LengthMismatch("normalization statistics do not match feature length");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (stdev[i] <= 0.0) continue;
        const double d = (a[i] - b[i]) / stdev[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

struct FingerDistance {
    double distance = 0;
    int best_sample_id = 0;
};

FingerDistance finger_distance(const Template& probe, const std::vector<Template>& enrolled,
                               const TemplateStore& store, Aggregation aggregation) {
    std::vector<double> dists;
    dists.reserve(enrolled.size());
    FingerDistance out{std::numeric_limits<double>::infinity(), 0};
    for (const Template& t : enrolled) {
        const double d = store_distance(probe.features, t.features, store);
        dists.push_back(d);
        if (d < out.distance) {  // strict keeps the lowest sample_id on ties
            out.distance = d;
            out.best_sample_id = t.sample_id;
        }
    }
    switch (aggregation) {
        case Aggregation::min:
            break;
        case Aggregation::mean: {
            double sum = 0.0;
            for (double d : dists) sum += d;
            out.distance = sum / static_cast<double>(dists.size());
            break;
        }
        case Aggregation::median: {
            std::sort(dists.begin(), dists.end());
            const std::size_t n = dists.size();
            out.distance = (n % 2) ? dists[n / 2] : 0.5 * (dists[n / 2 - 1] + dists[n / 2]);
            break;
        }
    }
    return out;
}

void check_config(const Template& probe, const TemplateStore& store) {
    if (probe.config_hash != store.config_hash)
        throw ConfigMismatch("probe config_hash " + probe.config_hash +
                             " does not match store config_hash " + store.config_hash);
}

}  // namespace

const char* to_string(Aggregation a) {
    switch (a) {
        case Aggregation::min: return "min";
        case Aggregation::mean: return "mean";
        case Aggregation::median: return "median";
    }
    return "min";
}

Aggregation aggregation_from_string(const std::string& name) {
    if (name == "min") return Aggregation::min;
    if (name == "mean") return Aggregation::mean;
    if (name == "median") return Aggregation::median;
    throw InvalidConfig("unknown aggregation '" + name + "' (expected min, mean or median)");
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw LengthMismatch("euclidean: length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

MatchDecision verify(const Template& probe, int claimed_finger, const TemplateStore& store,
                     double threshold, Aggregation aggregation) {
    check_config(probe, store);
    const auto it = store.by_finger.find(claimed_finger);
    if (it == store.by_finger.end())
        throw UnknownFinger("finger " + std::to_string(claimed_finger) + " is not enrolled");
    const FingerDistance fd = finger_distance(probe, it->second, store, aggregation);
    MatchDecision d;
    d.distance = fd.distance;
    d.threshold = threshold;
    d.matched = fd.distance <= threshold;
    d.best_sample_id = fd.best_sample_id;
    return d;
}

std::vector<IdentifyEntry> identify(const Template& probe, const TemplateStore& store,
                                    double threshold, Aggregation aggregation) {
    if (store.empty()) throw EmptyDataset("identify: the store is empty");
    check_config(probe, store);
    std::vector<IdentifyEntry> entries;
    entries.reserve(store.by_finger.size());
    for (const auto& [finger, templates] : store.by_finger) {
        const FingerDistance fd = finger_distance(probe, templates, store, aggregation);
        entries.push_back({finger, fd.distance, fd.distance <= threshold});
    }
    std::sort(entries.begin(), entries.end(), [](const IdentifyEntry& a, const IdentifyEntry& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.finger_id < b.finger_id;
    });
    return entries;
}

}  // namespace wavefp
