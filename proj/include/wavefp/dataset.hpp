#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace wavefp {

inline constexpr const char* kDefaultNamingPattern = "{finger}_{sample}";
inline constexpr int kEnrollSamplesPerFinger = 7;

struct DatasetEntry {
    int finger_id = 0;
    int sample_id = 0;
    std::filesystem::path path;
};

// Every .pgm/.png file under `dir` whose stem matches the naming pattern
// ("{finger}_{sample}" by default), sorted by (finger_id, sample_id).
// A recognized image file with a non-matching name raises MalformedFilename.
std::vector<DatasetEntry> scan_directory(const std::filesystem::path& dir,
                                         const std::string& pattern = kDefaultNamingPattern);

struct DatasetSplit {
    std::vector<DatasetEntry> enroll;         // samples 1..7 of gallery fingers
    std::vector<DatasetEntry> genuine_test;   // sample 8 (and later) of gallery fingers
    std::vector<DatasetEntry> impostor_test;  // every sample of the impostor directory
};

// Splits a gallery directory into enrollment and genuine probes, and scans an
// optional impostor directory (pass an empty path to skip it). Impostor
// fingers must be disjoint from gallery fingers, and every genuine probe's
// finger must have enrollment samples.
DatasetSplit scan_dataset(const std::filesystem::path& gallery_dir,
                          const std::filesystem::path& impostor_dir = {},
                          const std::string& pattern = kDefaultNamingPattern,
                          int enroll_samples = kEnrollSamplesPerFinger);

}  // namespace wavefp
