#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "hazepde/image.hpp"

namespace hazepde {

enum class ImageIoErrc {
    missing_file,
    malformed_header,
    truncated_payload,
    unsupported_maxval,
    unwritable_path,
};

[[nodiscard]] const char* to_string(ImageIoErrc code) noexcept;

class ImageIoError : public std::runtime_error {
public:
    ImageIoError(ImageIoErrc code, const std::string& detail);
    [[nodiscard]] ImageIoErrc code() const noexcept { return code_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    ImageIoErrc code_;
    std::string detail_;
};

/// Reads binary P5 (grayscale) or P6 (RGB) Netpbm with maxval 255.
/// Samples map to v/255. Header comments are skipped.
[[nodiscard]] ImageBuffer load_image(const std::filesystem::path& path);

/// Writes P5/P6 by channel count. Values are clamped to [0,1] and quantized
/// with round-half-away-from-zero on v*255. The file is written to a
/// sibling temp path and renamed into place.
void save_image(const ImageBuffer& image, const std::filesystem::path& path);

/// In-memory codec used by load_image/save_image.
[[nodiscard]] ImageBuffer decode_netpbm(const std::string& bytes);
[[nodiscard]] std::string encode_netpbm(const ImageBuffer& image);

}  // namespace hazepde
