#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "hazepde/image.hpp"
#include "hazepde/scattering.hpp"

namespace hazepde::fixtures {

inline ScalarField random_field(std::mt19937_64& rng, std::size_t w, std::size_t h,
                                double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    ScalarField f(w, h);
    for (double& v : f.data()) v = dist(rng);
    return f;
}

inline ImageBuffer random_image(std::mt19937_64& rng, std::size_t w, std::size_t h,
                                std::size_t channels = 3) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    ImageBuffer img(w, h, channels);
    for (double& v : img.data()) v = dist(rng);
    return img;
}

/// Smooth transmission in [lo, hi]: a product of low-frequency cosines.
inline TransmissionMap smooth_transmission(std::mt19937_64& rng, std::size_t w, std::size_t h,
                                           double lo, double hi) {
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> freq(0.02, 0.12);
    const double px = phase(rng), py = phase(rng), fx = freq(rng), fy = freq(rng);
    ScalarField t(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            const double s = 0.5 + 0.5 * std::cos(fx * static_cast<double>(c) + px) *
                                         std::cos(fy * static_cast<double>(r) + py);
            t.at(r, c) = lo + (hi - lo) * s;
        }
    }
    return TransmissionMap(std::move(t));
}

/// Outdoor-like clean scene: a sky band colored like the airlight over smooth
/// colored terrain, with dark specks every 6 pixels so every dark-channel
/// patch contains a near-black sample.
inline ImageBuffer outdoor_scene(std::uint64_t seed, std::size_t w = 64, std::size_t h = 64,
                                 double sky = 0.9) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double phase[3], freq[3];
    for (int k = 0; k < 3; ++k) {
        phase[k] = 6.0 * u01(rng);
        freq[k] = 0.05 + 0.1 * u01(rng);
    }
    ImageBuffer img(w, h, 3);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            for (std::size_t k = 0; k < 3; ++k) {
                double v = 0.5 + 0.35 * std::sin(freq[k] * static_cast<double>(r) + phase[k]) *
                                     std::cos(freq[(k + 1) % 3] * static_cast<double>(c) +
                                              phase[(k + 2) % 3]);
                if (r % 6 == 0 && c % 6 == 0) v = 0.02;
                if (r < 10) v = sky;
                img.at(r, c, k) = v;
            }
        }
    }
    return img;
}

/// The 64x64 hazy fixture used by pipeline and CLI tests.
inline ImageBuffer standard_hazy(std::uint64_t seed = 7) {
    const ImageBuffer clean = outdoor_scene(seed);
    return synthesize_haze(clean, TransmissionMap::uniform(64, 64, 0.4),
                           AtmosphericLight::uniform(3, 0.9));
}

/// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("hazepde_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] std::filesystem::path operator/(const std::string& name) const {
        return path_ / name;
    }
    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_bytes(const std::filesystem::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

inline std::string read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace hazepde::fixtures
