#include "hazepde/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hazepde {

namespace {

void require_matching(const ImageBuffer& image, const AtmosphericLight& airlight) {
    if (airlight.channels() != image.channels()) {
        throw InvalidInput("airlight has " + std::to_string(airlight.channels()) +
                           " components for a " + std::to_string(image.channels()) +
                           "-channel image");
    }
}

void require_same_grid(const ImageBuffer& image, const TransmissionMap& t) {
    if (image.width() != t.width() || image.height() != t.height()) {
        throw InvalidInput("transmission map shape does not match image");
    }
}

// Separable min filter over a border-truncated square window.
ScalarField min_filter(const ScalarField& in, std::size_t radius) {
    const std::size_t w = in.width();
    const std::size_t h = in.height();
    ScalarField rows(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            const std::size_t lo = c >= radius ? c - radius : 0;
            const std::size_t hi = std::min(w - 1, c + radius);
            double m = in.at(r, lo);
            for (std::size_t k = lo + 1; k <= hi; ++k) m = std::min(m, in.at(r, k));
            rows.at(r, c) = m;
        }
    }
    ScalarField out(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        const std::size_t lo = r >= radius ? r - radius : 0;
        const std::size_t hi = std::min(h - 1, r + radius);
        for (std::size_t c = 0; c < w; ++c) {
            double m = rows.at(lo, c);
            for (std::size_t k = lo + 1; k <= hi; ++k) m = std::min(m, rows.at(k, c));
            out.at(r, c) = m;
        }
    }
    return out;
}

}  // namespace

AtmosphericLight::AtmosphericLight(std::vector<double> components) : a_(std::move(components)) {
    if (a_.empty()) throw InvalidInput("airlight needs at least one component");
    for (double v : a_) {
        if (!(v > 0.0 && v <= 1.0)) {
            throw InvalidInput("airlight component " + std::to_string(v) +
                               " outside (0, 1]");
        }
    }
}

AtmosphericLight AtmosphericLight::uniform(std::size_t channels, double value) {
    return AtmosphericLight(std::vector<double>(channels, value));
}

TransmissionMap::TransmissionMap(ScalarField t) : t_(std::move(t)) {
    for (double v : t_.data()) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InvalidInput("transmission value " + std::to_string(v) + " outside [0, 1]");
        }
    }
}

TransmissionMap TransmissionMap::uniform(std::size_t width, std::size_t height, double value) {
    return TransmissionMap(ScalarField(width, height, value));
}

ScalarField dark_channel(const ImageBuffer& image, const AtmosphericLight& airlight,
                         std::size_t patch_radius) {
    require_matching(image, airlight);
    ScalarField per_pixel(image.width(), image.height());
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
        double m = image.data()[i * image.channels()] / airlight[0];
        for (std::size_t c = 1; c < image.channels(); ++c) {
            m = std::min(m, image.data()[i * image.channels() + c] / airlight[c]);
        }
        per_pixel[i] = m;
    }
    ScalarField dark = min_filter(per_pixel, patch_radius);
    for (double& v : dark.data()) v = std::min(v, 1.0);
    return dark;
}

ScalarField multiscale_dark_channel(const ImageBuffer& image, const AtmosphericLight& airlight,
                                    const std::vector<std::size_t>& radii,
                                    const std::vector<double>& weights) {
    if (radii.empty()) throw InvalidInput("multiscale dark channel needs at least one radius");
    if (radii.size() != weights.size()) {
        throw InvalidInput("radii and weights differ in length");
    }
    if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); })) {
        throw InvalidInput("scale weights must be nonnegative");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidInput("scale weights must sum to 1, got " + std::to_string(total));
    }

    ScalarField combined = dark_channel(image, airlight, radii[0]);
    for (double& v : combined.data()) v *= weights[0];
    for (std::size_t s = 1; s < radii.size(); ++s) {
        const ScalarField single = dark_channel(image, airlight, radii[s]);
        for (std::size_t i = 0; i < combined.size(); ++i) combined[i] += weights[s] * single[i];
    }
    // Rounding in the weighted sum can nudge a value past 1.
    for (double& v : combined.data()) v = std::min(v, 1.0);
    return combined;
}

AtmosphericLight estimate_atmospheric_light(const ImageBuffer& image, const ScalarField& dark,
                                            double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw InvalidInput("airlight fraction must lie in (0, 1]");
    }
    if (dark.width() != image.width() || dark.height() != image.height()) {
        throw InvalidInput("dark channel shape does not match image");
    }
    const std::size_t n = image.pixel_count();
    const auto wanted = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
    const std::size_t count = std::clamp<std::size_t>(wanted, 1, n);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count),
                      order.end(), [&](std::size_t a, std::size_t b) {
                          if (dark[a] != dark[b]) return dark[a] > dark[b];
                          return a < b;
                      });

    std::vector<double> a(image.channels(), 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        for (std::size_t c = 0; c < image.channels(); ++c) {
            a[c] += image.data()[order[k] * image.channels() + c];
        }
    }
    for (double& v : a) v = std::clamp(v / static_cast<double>(count), 0.05, 1.0);
    return AtmosphericLight(std::move(a));
}

TransmissionMap estimate_transmission(const ScalarField& dark, double omega) {
    if (!(omega > 0.0 && omega <= 1.0)) throw InvalidInput("omega must lie in (0, 1]");
    ScalarField t(dark.width(), dark.height());
    for (std::size_t i = 0; i < dark.size(); ++i) {
        if (!(dark[i] >= 0.0 && dark[i] <= 1.0)) {
            throw InvalidInput("dark channel value outside [0, 1]");
        }
        t[i] = 1.0 - omega * dark[i];
    }
    return TransmissionMap(std::move(t));
}

ImageBuffer reconstruct(const ImageBuffer& image, const TransmissionMap& t,
                        const AtmosphericLight& airlight, double t_floor) {
    if (!(t_floor > 0.0)) throw InvalidInput("t_floor must be positive");
    require_matching(image, airlight);
    require_same_grid(image, t);
    ImageBuffer out(image.width(), image.height(), image.channels());
    const std::size_t ch = image.channels();
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
        const double denom = std::max(t[i], t_floor);
        for (std::size_t c = 0; c < ch; ++c) {
            out.data()[i * ch + c] =
                (image.data()[i * ch + c] - airlight[c] * (1.0 - t[i])) / denom;
        }
    }
    return out;
}

ScalarField reconstruct_channel(const ScalarField& channel, const TransmissionMap& t,
                                double airlight, double t_floor) {
    if (!(t_floor > 0.0)) throw InvalidInput("t_floor must be positive");
    if (!(airlight > 0.0 && airlight <= 1.0)) throw InvalidInput("airlight outside (0, 1]");
    if (channel.width() != t.width() || channel.height() != t.height()) {
        throw InvalidInput("transmission map shape does not match channel");
    }
    ScalarField out(channel.width(), channel.height());
    for (std::size_t i = 0; i < channel.size(); ++i) {
        out[i] = (channel[i] - airlight * (1.0 - t[i])) / std::max(t[i], t_floor);
    }
    return out;
}

ImageBuffer synthesize_haze(const ImageBuffer& clean, const TransmissionMap& t,
                            const AtmosphericLight& airlight) {
    require_matching(clean, airlight);
    require_same_grid(clean, t);
    ImageBuffer out(clean.width(), clean.height(), clean.channels());
    const std::size_t ch = clean.channels();
    for (std::size_t i = 0; i < clean.pixel_count(); ++i) {
        for (std::size_t c = 0; c < ch; ++c) {
            out.data()[i * ch + c] = clean.data()[i * ch + c] * t[i] + airlight[c] * (1.0 - t[i]);
        }
    }
    return out;
}

}  // namespace hazepde
