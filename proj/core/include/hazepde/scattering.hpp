#pragma once

#include <cstddef>
#include <vector>

#include "hazepde/image.hpp"

namespace hazepde {

/// Per-channel airlight. Every component lies in (0, 1].
class AtmosphericLight {
public:
    explicit AtmosphericLight(std::vector<double> components);
    /// Same value in every channel.
    static AtmosphericLight uniform(std::size_t channels, double value);

    [[nodiscard]] std::size_t channels() const noexcept { return a_.size(); }
    [[nodiscard]] double operator[](std::size_t c) const noexcept { return a_[c]; }
    [[nodiscard]] const std::vector<double>& components() const noexcept { return a_; }

    friend bool operator==(const AtmosphericLight&, const AtmosphericLight&) = default;

private:
    std::vector<double> a_;
};

/// Transmission values in [0, 1]. Fresh estimates lie in [1 - omega, 1].
class TransmissionMap {
public:
    explicit TransmissionMap(ScalarField t);
    static TransmissionMap uniform(std::size_t width, std::size_t height, double value);

    [[nodiscard]] const ScalarField& field() const noexcept { return t_; }
    [[nodiscard]] std::size_t width() const noexcept { return t_.width(); }
    [[nodiscard]] std::size_t height() const noexcept { return t_.height(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return t_[i]; }

private:
    ScalarField t_;
};

/// Minimum over channels and over the border-truncated (2r+1)^2 patch of
/// I^c / A^c, clamped to at most 1.
[[nodiscard]] ScalarField dark_channel(const ImageBuffer& image, const AtmosphericLight& airlight,
                                       std::size_t patch_radius);

/// Per-pixel convex combination of single-scale dark channels.
[[nodiscard]] ScalarField multiscale_dark_channel(const ImageBuffer& image,
                                                  const AtmosphericLight& airlight,
                                                  const std::vector<std::size_t>& radii,
                                                  const std::vector<double>& weights);

inline const std::vector<std::size_t> kDefaultScales{3, 7, 15};

/// Mean color of the ceil(fraction*H*W) pixels with the largest dark-channel
/// value, each component clamped to [0.05, 1]. Ties are broken by pixel index.
[[nodiscard]] AtmosphericLight estimate_atmospheric_light(const ImageBuffer& image,
                                                          const ScalarField& dark,
                                                          double fraction = 0.001);

/// t = 1 - omega * dark.
[[nodiscard]] TransmissionMap estimate_transmission(const ScalarField& dark, double omega);

/// Inverts the scattering model: (I - A(1 - t)) / max(t, t_floor).
/// The result is not clamped.
[[nodiscard]] ImageBuffer reconstruct(const ImageBuffer& image, const TransmissionMap& t,
                                      const AtmosphericLight& airlight, double t_floor);

/// Single-channel form of reconstruct().
[[nodiscard]] ScalarField reconstruct_channel(const ScalarField& channel,
                                              const TransmissionMap& t, double airlight,
                                              double t_floor);

/// Forward scattering model J*t + A(1 - t).
[[nodiscard]] ImageBuffer synthesize_haze(const ImageBuffer& clean, const TransmissionMap& t,
                                          const AtmosphericLight& airlight);

}  // namespace hazepde
