#pragma once

#include <filesystem>
#include <string>

#include "wavefp/canny.hpp"
#include "wavefp/dwt.hpp"
#include "wavefp/glcm.hpp"

namespace wavefp {

inline constexpr int kTemplateSchemaVersion = 1;

struct DwtConfig {
    std::string wavelet = "db2";  // db1 | db2 | db4
    ExtensionMode mode = ExtensionMode::symmetric;
};

struct OrientationConfig {
    bool swap_axes = false;  // exchange the HL/LH gradient roles
};

// Every knob that shapes a template. Templates carry a hash of this so that
// vectors extracted under different settings can never be compared.
struct ExtractionConfig {
    DwtConfig dwt;
    GlcmConfig glcm;
    CannyConfig canny;
    OrientationConfig orientation;
    bool normalize = false;  // per-dimension z-score at match time, statistics
                             // taken from the enrollment store

    std::string canonical_string() const;
    std::string config_hash() const;  // FNV-1a 64 of the canonical string, hex
};

// JSON config file; every key is optional and defaults apply. Unknown keys
// are rejected.
ExtractionConfig load_config_file(const std::filesystem::path& path);
ExtractionConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ExtractionConfig& cfg);

}  // namespace wavefp
