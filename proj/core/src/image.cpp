#include "hazepde/image.hpp"

#include <algorithm>
#include <cmath>

namespace hazepde {

namespace {

void check_dims(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
        throw InvalidInput("field dimensions must be at least 1x1");
    }
}

bool finite_range(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

double clamp_unit(double v) { return std::min(std::max(v, 0.0), 1.0); }

}  // namespace

ScalarField::ScalarField(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(width * height, fill);
}

ScalarField::ScalarField(std::size_t width, std::size_t height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != width * height) {
        throw InvalidInput("field data length does not match width*height");
    }
}

bool ScalarField::all_finite() const noexcept { return finite_range(data_); }

double ScalarField::min() const {
    if (data_.empty()) throw InvalidInput("min of empty field");
    return *std::min_element(data_.begin(), data_.end());
}

double ScalarField::max() const {
    if (data_.empty()) throw InvalidInput("max of empty field");
    return *std::max_element(data_.begin(), data_.end());
}

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, std::size_t channels,
                         double fill)
    : width_(width), height_(height), channels_(channels) {
    check_dims(width, height);
    if (channels != 1 && channels != 3) {
        throw InvalidInput("image must have 1 or 3 channels");
    }
    data_.assign(width * height * channels, fill);
}

ImageBuffer::ImageBuffer(std::size_t width, std::size_t height, std::size_t channels,
                         std::vector<double> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
    check_dims(width, height);
    if (channels != 1 && channels != 3) {
        throw InvalidInput("image must have 1 or 3 channels");
    }
    if (data_.size() != width * height * channels) {
        throw InvalidInput("image data length does not match width*height*channels");
    }
}

bool ImageBuffer::all_finite() const noexcept { return finite_range(data_); }

ScalarField ImageBuffer::channel(std::size_t ch) const {
    if (ch >= channels_) throw InvalidInput("channel index out of range");
    ScalarField out(width_, height_);
    for (std::size_t i = 0; i < pixel_count(); ++i) {
        out[i] = data_[i * channels_ + ch];
    }
    return out;
}

void ImageBuffer::set_channel(std::size_t ch, const ScalarField& field) {
    if (ch >= channels_) throw InvalidInput("channel index out of range");
    if (field.width() != width_ || field.height() != height_) {
        throw InvalidInput("channel field shape does not match image");
    }
    for (std::size_t i = 0; i < pixel_count(); ++i) {
        data_[i * channels_ + ch] = field[i];
    }
}

ScalarField clamp01(const ScalarField& field) {
    if (!field.all_finite()) throw InvalidInput("clamp01: non-finite value");
    ScalarField out = field;
    for (double& v : out.data()) v = clamp_unit(v);
    return out;
}

ImageBuffer clamp01(const ImageBuffer& image) {
    if (!image.all_finite()) throw InvalidInput("clamp01: non-finite value");
    ImageBuffer out = image;
    for (double& v : out.data()) v = clamp_unit(v);
    return out;
}

}  // namespace hazepde
