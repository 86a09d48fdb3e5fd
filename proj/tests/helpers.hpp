#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "wavefp/image.hpp"
#include "wavefp/matrix.hpp"

namespace testing {

// Scratch directory under the system temp root, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        const auto base = std::filesystem::temp_directory_path();
        std::mt19937_64 rng(std::random_device{}());
        path_ = base / ("wavefp_" + tag + "_" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline wavefp::Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                    double lo = 0.0, double hi = 255.0) {
    wavefp::Matrix m(rows, cols);
    for (double& v : m.data()) v = lo + uniform01(rng) * (hi - lo);
    return m;
}

inline wavefp::GrayImage random_image(std::size_t width, std::size_t height, std::mt19937_64& rng) {
    wavefp::GrayImage img;
    img.pixels = random_matrix(height, width, rng);
    return img;
}

}  // namespace testing
