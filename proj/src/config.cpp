#include "wavefp/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

std::string fmt_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void reject_unknown_keys(const nlohmann::json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw InvalidConfig("unknown config key '" + where + key + "'");
    }
}

}  // namespace

std::string ExtractionConfig::canonical_string() const {
    std::ostringstream os;
    os << "schema=" << kTemplateSchemaVersion
       << ";wavelet=" << dwt.wavelet
       << ";mode=" << to_string(dwt.mode)
       << ";glcm.levels=" << glcm.levels
       << ";glcm.offset=" << glcm.offset_dy << ',' << glcm.offset_dx
       << ";glcm.symmetric=" << (glcm.symmetric ? 1 : 0)
       << ";canny.sigma=" << fmt_double(canny.sigma)
       << ";canny.t_low=" << fmt_double(canny.t_low)
       << ";canny.t_high=" << fmt_double(canny.t_high)
       << ";orientation.swap_axes=" << (orientation.swap_axes ? 1 : 0)
       << ";normalize=" << (normalize ? 1 : 0);
    return os.str();
}

std::string ExtractionConfig::config_hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_string())));
    return std::string(buf);
}

ExtractionConfig config_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidConfig(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw InvalidConfig("config must be a JSON object");
    reject_unknown_keys(j, {"wavelet", "dwt_mode", "glcm", "canny", "orientation", "normalize"}, "");

    ExtractionConfig cfg;
    try {
        if (j.contains("wavelet")) cfg.dwt.wavelet = j["wavelet"].get<std::string>();
        if (j.contains("dwt_mode"))
            cfg.dwt.mode = extension_mode_from_string(j["dwt_mode"].get<std::string>());
        if (j.contains("glcm")) {
            const auto& g = j["glcm"];
            reject_unknown_keys(g, {"levels", "offset", "symmetric"}, "glcm.");
            if (g.contains("levels")) cfg.glcm.levels = g["levels"].get<int>();
            if (g.contains("offset")) {
                const auto off = g["offset"].get<std::vector<int>>();
                if (off.size() != 2) throw InvalidConfig("glcm.offset must be [dy, dx]");
                cfg.glcm.offset_dy = off[0];
                cfg.glcm.offset_dx = off[1];
            }
            if (g.contains("symmetric")) cfg.glcm.symmetric = g["symmetric"].get<bool>();
        }
        if (j.contains("canny")) {
            const auto& c = j["canny"];
            reject_unknown_keys(c, {"sigma", "t_low", "t_high"}, "canny.");
            if (c.contains("sigma")) cfg.canny.sigma = c["sigma"].get<double>();
            if (c.contains("t_low")) cfg.canny.t_low = c["t_low"].get<double>();
            if (c.contains("t_high")) cfg.canny.t_high = c["t_high"].get<double>();
        }
        if (j.contains("orientation")) {
            const auto& o = j["orientation"];
            reject_unknown_keys(o, {"swap_axes"}, "orientation.");
            if (o.contains("swap_axes")) cfg.orientation.swap_axes = o["swap_axes"].get<bool>();
        }
        if (j.contains("normalize")) cfg.normalize = j["normalize"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("bad config value: ") + e.what());
    }

    // fail fast on settings the pipeline would reject later
    Wavelet::from_name(cfg.dwt.wavelet);
    if (cfg.glcm.levels < 2) throw InvalidConfig("glcm.levels must be >= 2");
    if (cfg.glcm.offset_dy == 0 && cfg.glcm.offset_dx == 0)
        throw InvalidConfig("glcm.offset must not be (0,0)");
    if (!(cfg.canny.sigma > 0.0)) throw InvalidConfig("canny.sigma must be > 0");
    if (!(cfg.canny.t_low >= 0.0 && cfg.canny.t_low < cfg.canny.t_high))
        throw InvalidConfig("canny thresholds need 0 <= t_low < t_high");
    return cfg;
}

ExtractionConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("config file not found: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json_text(const ExtractionConfig& cfg) {
    nlohmann::json j{
        {"wavelet", cfg.dwt.wavelet},
        {"dwt_mode", to_string(cfg.dwt.mode)},
        {"glcm",
         {{"levels", cfg.glcm.levels},
          {"offset", {cfg.glcm.offset_dy, cfg.glcm.offset_dx}},
          {"symmetric", cfg.glcm.symmetric}}},
        {"canny", {{"sigma", cfg.canny.sigma}, {"t_low", cfg.canny.t_low}, {"t_high", cfg.canny.t_high}}},
        {"orientation", {{"swap_axes", cfg.orientation.swap_axes}}},
        {"normalize", cfg.normalize},
    };
    return j.dump(2);
}

}  // namespace wavefp
