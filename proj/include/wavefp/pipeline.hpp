#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wavefp/config.hpp"
#include "wavefp/dataset.hpp"
#include "wavefp/image.hpp"

namespace wavefp {

// Feature vector layout, per decomposition level:
//   [ 0,  8)  directional (coherence + orientation GLCM statistics)
//   [ 8, 24)  center-area (4 sub bands x 4 GLCM statistics)
//   [24, 32)  edge (4 sub bands x {density, mean gradient magnitude})
// Levels 1..3 are concatenated in order: 96 values total.
inline constexpr std::size_t kDirectionalFeatureCount = 8;
inline constexpr std::size_t kCenterFeatureCount = 16;
inline constexpr std::size_t kEdgeFeatureCount = 8;
inline constexpr std::size_t kFeaturesPerLevel =
    kDirectionalFeatureCount + kCenterFeatureCount + kEdgeFeatureCount;
inline constexpr std::size_t kLevelCount = 3;
inline constexpr std::size_t kFeatureCount = kLevelCount * kFeaturesPerLevel;

// The full non-minutiae feature vector of one image. Pure in (pixels, cfg);
// never produces NaN or Inf.
std::vector<double> extract(const GrayImage& image, const ExtractionConfig& cfg);

struct Template {
    int finger_id = 0;
    int sample_id = 0;
    std::vector<double> features;
    std::string config_hash;
    std::string source_path;  // empty = unknown
};

// One JSON document per template; the round trip is bit-exact.
void save_template(const Template& t, const std::filesystem::path& path);
Template load_template(const std::filesystem::path& path);

struct EnrollFailure {
    std::string path;
    std::string message;
};

struct TemplateStore {
    ExtractionConfig config;
    std::string config_hash;
    std::map<int, std::vector<Template>> by_finger;  // templates sorted by sample_id
    // per-dimension z-score statistics, present when config.normalize
    std::optional<std::vector<double>> norm_mean;
    std::optional<std::vector<double>> norm_std;

    std::size_t size() const;
    std::vector<int> finger_ids() const;
    bool empty() const { return by_finger.empty(); }
    void insert(Template t);
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total, const std::string& path)>;

struct EnrollResult {
    TemplateStore store;
    std::vector<EnrollFailure> failures;
};

Template extract_template(const DatasetEntry& entry, const ExtractionConfig& cfg);

// Extracts one template per entry. Per-image failures are recorded and
// skipped, never fatal. When cfg.normalize is set the store also gets the
// per-dimension mean/std of the enrolled vectors.
EnrollResult enroll_database(const std::vector<DatasetEntry>& entries, const ExtractionConfig& cfg,
                             const ProgressFn& progress = {});

// A store on disk is a directory of template files plus manifest.json.
void save_store(const TemplateStore& store, const std::filesystem::path& dir);
TemplateStore load_store(const std::filesystem::path& dir);

}  // namespace wavefp
