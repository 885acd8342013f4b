#pragma once

#include <limits>

#include "hazepde/image.hpp"

namespace hazepde {

/// Full-reference fidelity between two images on the unit intensity scale.
/// Identical images report psnr = +infinity.
struct MetricReport {
    double mse = 0.0;
    double psnr = std::numeric_limits<double>::infinity();
    double mae = 0.0;

    [[nodiscard]] bool identical() const noexcept { return mse == 0.0; }
};

[[nodiscard]] MetricReport compare(const ImageBuffer& a, const ImageBuffer& b);

/// 10 log10(1 / mse), +infinity when mse is zero.
[[nodiscard]] double psnr_from_mse(double mse);

}  // namespace hazepde
