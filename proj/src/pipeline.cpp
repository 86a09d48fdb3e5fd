#include "wavefp/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavefp/canny.hpp"
#include "wavefp/centerarea.hpp"
#include "wavefp/errors.hpp"
#include "wavefp/orientation.hpp"

namespace wavefp {
namespace {

void append(std::vector<double>& out, const std::vector<double>& part) {
    out.insert(out.end(), part.begin(), part.end());
}

nlohmann::json template_to_json(const Template& t) {
    nlohmann::json j{
        {"schema_version", kTemplateSchemaVersion},
        {"finger_id", t.finger_id},
        {"sample_id", t.sample_id},
        {"config_hash", t.config_hash},
        {"features", t.features},
    };
    if (!t.source_path.empty()) j["source_path"] = t.source_path;
    return j;
}

Template template_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw IoFailure(where + ": template is not a JSON object");
    if (!j.contains("schema_version"))
        throw SchemaMismatch(where + ": missing schema_version");
    const int schema = j["schema_version"].get<int>();
    if (schema != kTemplateSchemaVersion)
        throw SchemaMismatch(where + ": schema_version " + std::to_string(schema) +
                             " (expected " + std::to_string(kTemplateSchemaVersion) + ")");
    if (!j.contains("config_hash")) throw ConfigHashMissing(where + ": missing config_hash");
    Template t;
    try {
        t.finger_id = j.at("finger_id").get<int>();
        t.sample_id = j.at("sample_id").get<int>();
        t.config_hash = j.at("config_hash").get<std::string>();
        t.features = j.at("features").get<std::vector<double>>();
        if (j.contains("source_path")) t.source_path = j["source_path"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw IoFailure(where + ": malformed template: " + e.what());
    }
    for (double v : t.features)
        if (!std::isfinite(v)) throw IoFailure(where + ": non-finite feature value");
    return t;
}

nlohmann::json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open: " + path.string());
    try {
        return nlohmann::json::parse(in);  // parse errors carry the byte position
    } catch (const nlohmann::json::parse_error& e) {
        throw IoFailure(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw IoFailure("short write: " + path.string());
}

}  // namespace

std::vector<double> extract(const GrayImage& image, const ExtractionConfig& cfg) {
    const Wavelet wavelet = Wavelet::from_name(cfg.dwt.wavelet);
    const SubbandPyramid pyr = decompose3(image, wavelet, cfg.dwt.mode);
    std::vector<double> out;
    out.reserve(kFeatureCount);
    for (const SubbandSet& bands : pyr.levels) {
        append(out, directional_features(bands, cfg.glcm, cfg.orientation.swap_axes));
        append(out, center_features(bands, cfg.glcm));
        append(out, edge_features(bands, cfg.canny));
    }
    for (double v : out)
        if (!std::isfinite(v)) throw Error("extract produced a non-finite feature value");
    return out;
}

void save_template(const Template& t, const std::filesystem::path& path) {
    for (double v : t.features)
        if (!std::isfinite(v)) throw Error("refusing to persist non-finite features");
    if (t.config_hash.empty()) throw ConfigHashMissing("template has no config_hash");
    write_text_file(path, template_to_json(t).dump(2) + "\n");
}

Template load_template(const std::filesystem::path& path) {
    return template_from_json(parse_json_file(path), path.string());
}

std::size_t TemplateStore::size() const {
    std::size_t n = 0;
    for (const auto& [finger, ts] : by_finger) n += ts.size();
    return n;
}

std::vector<int> TemplateStore::finger_ids() const {
    std::vector<int> ids;
    ids.reserve(by_finger.size());
    for (const auto& [finger, ts] : by_finger) ids.push_back(finger);
    return ids;
}

void TemplateStore::insert(Template t) {
    auto& ts = by_finger[t.finger_id];
    ts.push_back(std::move(t));
    std::sort(ts.begin(), ts.end(),
              [](const Template& a, const Template& b) { return a.sample_id < b.sample_id; });
}

Template extract_template(const DatasetEntry& entry, const ExtractionConfig& cfg) {
    Template t;
    t.finger_id = entry.finger_id;
    t.sample_id = entry.sample_id;
    t.features = extract(load_image(entry.path), cfg);
    t.config_hash = cfg.config_hash();
    t.source_path = entry.path.string();
    return t;
}

EnrollResult enroll_database(const std::vector<DatasetEntry>& entries, const ExtractionConfig& cfg,
                             const ProgressFn& progress) {
    if (entries.empty()) throw EmptyDataset("enroll_database: no entries");
    EnrollResult result;
    result.store.config = cfg;
    result.store.config_hash = cfg.config_hash();
    std::size_t done = 0;
    for (const DatasetEntry& entry : entries) {
        try {
            result.store.insert(extract_template(entry, cfg));
        } catch (const Error& e) {
            result.failures.push_back({entry.path.string(), e.what()});
        }
        ++done;
        if (progress) progress(done, entries.size(), entry.path.string());
    }
    if (cfg.normalize && !result.store.empty()) {
        const std::size_t dims = result.store.by_finger.begin()->second.front().features.size();
        std::vector<double> mean(dims, 0.0), stdev(dims, 0.0);
        std::size_t count = 0;
        for (const auto& [finger, ts] : result.store.by_finger)
            for (const Template& t : ts) {
                for (std::size_t i = 0; i < dims; ++i) mean[i] += t.features[i];
                ++count;
            }
        for (double& v : mean) v /= static_cast<double>(count);
        for (const auto& [finger, ts] : result.store.by_finger)
            for (const Template& t : ts)
                for (std::size_t i = 0; i < dims; ++i) {
                    const double d = t.features[i] - mean[i];
                    stdev[i] += d * d;
                }
        for (double& v : stdev) v = std::sqrt(v / static_cast<double>(count));
        result.store.norm_mean = std::move(mean);
        result.store.norm_std = std::move(stdev);
    }
    return result;
}

void save_store(const TemplateStore& store, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    nlohmann::json manifest{
        {"schema_version", kTemplateSchemaVersion},
        {"config_hash", store.config_hash},
        {"config", nlohmann::json::parse(config_to_json_text(store.config))},
    };
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [finger, ts] : store.by_finger) {
        for (const Template& t : ts) {
            const std::string file =
                std::to_string(t.finger_id) + "_" + std::to_string(t.sample_id) + ".json";
            save_template(t, dir / file);
            list.push_back({{"finger_id", t.finger_id}, {"sample_id", t.sample_id}, {"file", file}});
        }
    }
    manifest["templates"] = std::move(list);
    if (store.norm_mean && store.norm_std) {
        manifest["normalization"] = {{"mean", *store.norm_mean}, {"std", *store.norm_std}};
    }
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

TemplateStore load_store(const std::filesystem::path& dir) {
    const std::filesystem::path manifest_path = dir / "manifest.json";
    if (!std::filesystem::is_regular_file(manifest_path))
        throw FileNotFound("store manifest not found: " + manifest_path.string());
    const nlohmann::json manifest = parse_json_file(manifest_path);

    if (!manifest.contains("schema_version"))
        throw SchemaMismatch(manifest_path.string() + ": missing schema_version");
    if (manifest["schema_version"].get<int>() != kTemplateSchemaVersion)
        throw SchemaMismatch(manifest_path.string() + ": unsupported schema_version");
    if (!manifest.contains("config_hash"))
        throw ConfigHashMissing(manifest_path.string() + ": missing config_hash");

    TemplateStore store;
    store.config_hash = manifest["config_hash"].get<std::string>();
    if (!manifest.contains("config"))
        throw IoFailure(manifest_path.string() + ": missing config echo");
    store.config = config_from_json_text(manifest["config"].dump());
    if (store.config.config_hash() != store.config_hash)
        throw ConfigMismatch(manifest_path.string() + ": config echo does not match config_hash");

    try {
        for (const auto& entry : manifest.at("templates")) {
            Template t = load_template(dir / entry.at("file").get<std::string>());
            if (t.config_hash != store.config_hash)
                throw ConfigMismatch(dir.string() + ": template " +
                                     entry.at("file").get<std::string>() +
                                     " was extracted under a different config");
            store.insert(std::move(t));
        }
        if (manifest.contains("normalization")) {
            store.norm_mean = manifest["normalization"].at("mean").get<std::vector<double>>();
            store.norm_std = manifest["normalization"].at("std").get<std::vector<double>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoFailure(manifest_path.string() + ": malformed manifest: " + e.what());
    }
    return store;
}

}  // namespace wavefp
