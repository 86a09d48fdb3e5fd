#include "wavefp/image.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wavefp/errors.hpp"

namespace wavefp {
namespace {

std::string read_file_bytes(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec))
        throw FileNotFound("no such file: " + path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFound("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

// Netpbm header tokenizer: tokens are whitespace separated; '#' starts a
// comment running to end of line.
class PnmCursor {
public:
    PnmCursor(const std::string& buf, const std::string& name) : buf_(buf), name_(name) {}

    std::string next_token() {
        skip_ws_and_comments();
        if (pos_ >= buf_.size()) throw CorruptHeader(name_ + ": payload truncated");
        const std::size_t start = pos_;
        while (pos_ < buf_.size() && !std::isspace(static_cast<unsigned char>(buf_[pos_]))) ++pos_;
        return buf_.substr(start, pos_ - start);
    }

    long next_int(const char* what) {
        const std::string tok = next_token();
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw CorruptHeader(name_ + ": bad " + what + " token '" + tok + "'");
        return v;
    }

    // A single whitespace byte separates the maxval from a P5 payload.
    std::size_t binary_payload_start() {
        if (pos_ >= buf_.size() || !std::isspace(static_cast<unsigned char>(buf_[pos_])))
            throw CorruptHeader(name_ + ": missing separator before binary payload");
        return pos_ + 1;
    }

private:
    void skip_ws_and_comments() {
        while (pos_ < buf_.size()) {
            const char c = buf_[pos_];
            if (c == '#') {
                while (pos_ < buf_.size() && buf_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& buf_;
    std::string name_;
    std::size_t pos_ = 0;
};

GrayImage load_pgm(const std::string& buf, const std::string& name) {
    PnmCursor cur(buf, name);
    const std::string magic = cur.next_token();
    const long w = cur.next_int("width");
    const long h = cur.next_int("height");
    if (w <= 0 || h <= 0)
        throw CorruptHeader(name + ": non-positive dimensions " + std::to_string(w) + "x" + std::to_string(h));
    const long maxval = cur.next_int("maxval");
    if (maxval < 1) throw CorruptHeader(name + ": maxval < 1");
    if (maxval > 255)
        throw UnsupportedFormat(name + ": 16-bit PGM (maxval > 255) is not supported");

    GrayImage img;
    img.pixels = Matrix(static_cast<std::size_t>(h), static_cast<std::size_t>(w));
    const std::size_t n = img.pixels.size();
    if (magic == "P5") {
        const std::size_t start = cur.binary_payload_start();
        if (buf.size() < start || buf.size() - start < n)
            throw CorruptHeader(name + ": payload truncated (" + std::to_string(buf.size() - start) +
                                " of " + std::to_string(n) + " bytes)");
        for (std::size_t i = 0; i < n; ++i)
            img.pixels.data()[i] = static_cast<double>(static_cast<unsigned char>(buf[start + i]));
    } else {  // P2
        for (std::size_t i = 0; i < n; ++i) {
            const long v = cur.next_int("pixel");
            if (v < 0 || v > maxval)
                throw CorruptHeader(name + ": pixel value " + std::to_string(v) + " outside [0, maxval]");
            img.pixels.data()[i] = static_cast<double>(v);
        }
    }
    return img;
}

GrayImage load_png(const std::filesystem::path& path) {
    png_image pi;
    std::memset(&pi, 0, sizeof pi);
    pi.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&pi, path.string().c_str())) {
        std::string msg = pi.message;
        png_image_free(&pi);
        throw CorruptHeader(path.string() + ": " + msg);
    }
    const bool color = (pi.format & PNG_FORMAT_FLAG_COLOR) != 0;
    pi.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<unsigned char> buf(PNG_IMAGE_SIZE(pi));
    if (!png_image_finish_read(&pi, nullptr, buf.data(), 0, nullptr)) {
        std::string msg = pi.message;
        png_image_free(&pi);
        throw CorruptHeader(path.string() + ": " + msg);
    }

    GrayImage img;
    img.pixels = Matrix(pi.height, pi.width);
    const std::size_t n = img.pixels.size();
    if (color) {
        for (std::size_t i = 0; i < n; ++i) {
            const double r = buf[3 * i + 0], g = buf[3 * i + 1], b = buf[3 * i + 2];
            img.pixels.data()[i] = 0.299 * r + 0.587 * g + 0.114 * b;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            img.pixels.data()[i] = static_cast<double>(buf[i]);
    }
    return img;
}

bool has_png_signature(const std::string& buf) {
    static const unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    return buf.size() >= 8 && std::memcmp(buf.data(), sig, 8) == 0;
}

}  // namespace

GrayImage load_image(const std::filesystem::path& path) {
    const std::string buf = read_file_bytes(path);
    if (buf.size() >= 2 && buf[0] == 'P' && (buf[1] == '2' || buf[1] == '5'))
        return load_pgm(buf, path.string());
    if (has_png_signature(buf))
        return load_png(path);
    throw UnsupportedFormat(path.string() + ": not a PGM (P2/P5) or PNG file");
}

void save_pgm(const GrayImage& image, const std::filesystem::path& path) {
    if (image.pixels.empty()) throw EmptyInput("cannot save an empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
    std::string payload(image.pixels.size(), '\0');
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        const double v = std::clamp(image.pixels.data()[i], 0.0, 255.0);
        payload[i] = static_cast<char>(static_cast<unsigned char>(std::llround(v)));
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoFailure("short write: " + path.string());
}

}  // namespace wavefp
