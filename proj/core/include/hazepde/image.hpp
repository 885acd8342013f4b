#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hazepde {

/// H×W real-valued grid, row-major. Holds dark channels, transmission and
/// lambda maps, and the per-channel solver state.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(std::size_t width, std::size_t height, double fill = 0.0);
    ScalarField(std::size_t width, std::size_t height, std::vector<double> data);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    [[nodiscard]] double& at(std::size_t row, std::size_t col) noexcept {
        return data_[row * width_ + col];
    }
    [[nodiscard]] double at(std::size_t row, std::size_t col) const noexcept {
        return data_[row * width_ + col];
    }
    [[nodiscard]] double& operator[](std::size_t i) noexcept { return data_[i]; }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return data_[i]; }

    [[nodiscard]] std::span<double> data() noexcept { return data_; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] bool same_shape(const ScalarField& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }
    [[nodiscard]] bool all_finite() const noexcept;
    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> data_;
};

/// H×W×C pixel grid with channels interleaved: sample (row r, col c,
/// channel k) lives at data[(r*width + c)*channels + k].
class ImageBuffer {
public:
    ImageBuffer() = default;
    ImageBuffer(std::size_t width, std::size_t height, std::size_t channels, double fill = 0.0);
    ImageBuffer(std::size_t width, std::size_t height, std::size_t channels,
                std::vector<double> data);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::size_t channels() const noexcept { return channels_; }
    [[nodiscard]] std::size_t pixel_count() const noexcept { return width_ * height_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }

    [[nodiscard]] double& at(std::size_t row, std::size_t col, std::size_t ch) noexcept {
        return data_[(row * width_ + col) * channels_ + ch];
    }
    [[nodiscard]] double at(std::size_t row, std::size_t col, std::size_t ch) const noexcept {
        return data_[(row * width_ + col) * channels_ + ch];
    }

    [[nodiscard]] std::span<double> data() noexcept { return data_; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] bool same_shape(const ImageBuffer& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_ &&
               channels_ == other.channels_;
    }
    [[nodiscard]] bool all_finite() const noexcept;

    /// Copies one channel out as a scalar field.
    [[nodiscard]] ScalarField channel(std::size_t ch) const;
    /// Overwrites one channel from a field of matching width/height.
    void set_channel(std::size_t ch, const ScalarField& field);

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::size_t channels_ = 0;
    std::vector<double> data_;
};

/// Raised for shape mismatches, out-of-range parameters and non-finite data.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Clamp every value to [0,1]. Rejects non-finite input.
[[nodiscard]] ScalarField clamp01(const ScalarField& field);
[[nodiscard]] ImageBuffer clamp01(const ImageBuffer& image);

}  // namespace hazepde
