#include "wavefp/dataset.hpp"

#include <algorithm>
#include <cstring>
#include <regex>
#include <set>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

struct CompiledPattern {
    std::regex rx;
    int finger_group = 1;
    int sample_group = 2;
};

CompiledPattern compile_pattern(const std::string& pattern) {
    std::string rx;
    int group = 0, finger_group = 0, sample_group = 0;
    for (std::size_t i = 0; i < pattern.size();) {
        if (pattern.compare(i, 8, "{finger}") == 0) {
            finger_group = ++group;
            rx += "(\\d+)";
            i += 8;
        } else if (pattern.compare(i, 8, "{sample}") == 0) {
            sample_group = ++group;
            rx += "(\\d+)";
            i += 8;
        } else {
            const char c = pattern[i++];
            if (std::strchr("\\^$.|?*+()[]{}", c)) rx += '\\';
            rx += c;
        }
    }
    if (!finger_group || !sample_group)
        throw InvalidConfig("naming pattern must contain {finger} and {sample}: '" + pattern + "'");
    return {std::regex(rx), finger_group, sample_group};
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

int parse_id(const std::string& s, const std::filesystem::path& path) {
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw MalformedFilename("id out of range in " + path.string());
    }
}

}  // namespace

std::vector<DatasetEntry> scan_directory(const std::filesystem::path& dir, const std::string& pattern) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        throw FileNotFound("dataset directory not found: " + dir.string());

    const CompiledPattern compiled = compile_pattern(pattern);
    std::vector<DatasetEntry> entries;
    for (const auto& de : std::filesystem::directory_iterator(dir)) {
        if (!de.is_regular_file()) continue;
        const std::string ext = lowercase(de.path().extension().string());
        if (ext != ".pgm" && ext != ".png") continue;
        const std::string stem = de.path().stem().string();
        std::smatch m;
        if (!std::regex_match(stem, m, compiled.rx))
            throw MalformedFilename("filename does not match pattern '" + pattern + "': " +
                                    de.path().string());
        const int finger = parse_id(m[compiled.finger_group].str(), de.path());
        const int sample = parse_id(m[compiled.sample_group].str(), de.path());
        if (finger <= 0 || sample <= 0)
            throw MalformedFilename("finger and sample ids must be positive: " + de.path().string());
        entries.push_back({finger, sample, de.path()});
    }
    if (entries.empty()) throw EmptyDataset("no images found in " + dir.string());

    std::sort(entries.begin(), entries.end(), [](const DatasetEntry& a, const DatasetEntry& b) {
        if (a.finger_id != b.finger_id) return a.finger_id < b.finger_id;
        if (a.sample_id != b.sample_id) return a.sample_id < b.sample_id;
        return a.path < b.path;
    });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].finger_id == entries[i - 1].finger_id &&
            entries[i].sample_id == entries[i - 1].sample_id)
            throw MalformedFilename("duplicate sample: " + entries[i - 1].path.string() + " and " +
                                    entries[i].path.string());
    }
    return entries;
}

DatasetSplit scan_dataset(const std::filesystem::path& gallery_dir,
                          const std::filesystem::path& impostor_dir, const std::string& pattern,
                          int enroll_samples) {
    DatasetSplit split;
    std::set<int> enrolled;
    for (const DatasetEntry& e : scan_directory(gallery_dir, pattern)) {
        if (e.sample_id <= enroll_samples) {
            enrolled.insert(e.finger_id);
            split.enroll.push_back(e);
        } else {
            split.genuine_test.push_back(e);
        }
    }
    for (const DatasetEntry& g : split.genuine_test) {
        if (!enrolled.count(g.finger_id))
            throw UnknownFinger("genuine probe finger " + std::to_string(g.finger_id) +
                                " has no enrollment samples: " + g.path.string());
    }
    if (!impostor_dir.empty()) {
        split.impostor_test = scan_directory(impostor_dir, pattern);
        for (const DatasetEntry& i : split.impostor_test) {
            if (enrolled.count(i.finger_id))
                throw OverlapError("impostor finger " + std::to_string(i.finger_id) +
                                   " is also enrolled: " + i.path.string());
        }
    }
    return split;
}

}  // namespace wavefp
