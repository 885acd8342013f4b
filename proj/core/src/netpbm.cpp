#include "hazepde/netpbm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <system_error>

namespace hazepde {

const char* to_string(ImageIoErrc code) noexcept {
    switch (code) {
        case ImageIoErrc::missing_file: return "missing file";
        case ImageIoErrc::malformed_header: return "malformed header";
        case ImageIoErrc::truncated_payload: return "truncated payload";
        case ImageIoErrc::unsupported_maxval: return "unsupported maxval";
        case ImageIoErrc::unwritable_path: return "unwritable path";
    }
    return "unknown";
}

ImageIoError::ImageIoError(ImageIoErrc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(const std::string& bytes) : bytes_(bytes) {}

    void skip_whitespace_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = static_cast<unsigned char>(bytes_[pos_]);
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::size_t read_number(const char* what) {
        skip_whitespace_and_comments();
        if (pos_ >= bytes_.size()) {
            throw ImageIoError(ImageIoErrc::malformed_header,
                               std::string("header ends before ") + what);
        }
        std::size_t value = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() &&
               std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
            ++pos_;
            if (++digits > 9) {
                throw ImageIoError(ImageIoErrc::malformed_header,
                                   std::string(what) + " is too large");
            }
        }
        if (digits == 0) {
            throw ImageIoError(ImageIoErrc::malformed_header,
                               std::string("expected a number for ") + what);
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void consume_raster_separator() {
        if (pos_ >= bytes_.size() ||
            !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ImageIoError(ImageIoErrc::malformed_header,
                               "missing whitespace after maxval");
        }
        ++pos_;
    }

    [[nodiscard]] std::size_t position() const noexcept { return pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }

private:
    const std::string& bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

ImageBuffer decode_netpbm(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
        throw ImageIoError(ImageIoErrc::malformed_header, "expected magic P5 or P6");
    }
    const std::size_t channels = bytes[1] == '5' ? 1 : 3;

    HeaderReader reader(bytes);
    reader.advance(2);
    if (reader.position() < bytes.size() &&
        !std::isspace(static_cast<unsigned char>(bytes[reader.position()])) &&
        bytes[reader.position()] != '#') {
        throw ImageIoError(ImageIoErrc::malformed_header, "garbage after magic number");
    }
    const std::size_t width = reader.read_number("width");
    const std::size_t height = reader.read_number("height");
    const std::size_t maxval = reader.read_number("maxval");
    if (width == 0 || height == 0) {
        throw ImageIoError(ImageIoErrc::malformed_header, "zero image dimension");
    }
    if (maxval == 0 || maxval > 65535) {
        throw ImageIoError(ImageIoErrc::malformed_header,
                           "maxval out of range: " + std::to_string(maxval));
    }
    if (maxval != 255) {
        throw ImageIoError(ImageIoErrc::unsupported_maxval,
                           "only maxval 255 is supported, got " + std::to_string(maxval));
    }
    reader.consume_raster_separator();

    const std::size_t expected = width * height * channels;
    const std::size_t available = bytes.size() - reader.position();
    if (available < expected) {
        throw ImageIoError(ImageIoErrc::truncated_payload,
                           "expected " + std::to_string(expected) + " samples, found " +
                               std::to_string(available));
    }

    std::vector<double> data(expected);
    const auto* raster =
        reinterpret_cast<const unsigned char*>(bytes.data() + reader.position());
    for (std::size_t i = 0; i < expected; ++i) {
        data[i] = static_cast<double>(raster[i]) / 255.0;
    }
    return ImageBuffer(width, height, channels, std::move(data));
}

std::string encode_netpbm(const ImageBuffer& image) {
    if (!image.all_finite()) {
        throw InvalidInput("encode_netpbm: non-finite sample");
    }
    std::string out = image.channels() == 1 ? "P5\n" : "P6\n";
    out += std::to_string(image.width()) + ' ' + std::to_string(image.height()) + "\n255\n";
    out.reserve(out.size() + image.size());
    for (double v : image.data()) {
        const double clamped = std::min(std::max(v, 0.0), 1.0);
        out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(clamped * 255.0))));
    }
    return out;
}

ImageBuffer load_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw ImageIoError(ImageIoErrc::missing_file, path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ImageIoError(ImageIoErrc::missing_file, path.string());
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return decode_netpbm(bytes);
    } catch (const ImageIoError& e) {
        throw ImageIoError(e.code(), path.string() + ": " + e.detail());
    }
}

void save_image(const ImageBuffer& image, const std::filesystem::path& path) {
    const std::string bytes = encode_netpbm(image);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ImageIoError(ImageIoErrc::unwritable_path, path.string());
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw ImageIoError(ImageIoErrc::unwritable_path, path.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw ImageIoError(ImageIoErrc::unwritable_path, path.string());
    }
}

}  // namespace hazepde
