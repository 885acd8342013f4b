#include "hazepde/refine.hpp"

#include <algorithm>
#include <vector>

namespace hazepde {

ScalarField box_mean(const ScalarField& field, std::size_t radius) {
    const std::size_t w = field.width();
    const std::size_t h = field.height();
    // Summed-area table with a zero guard row and column.
    std::vector<double> sat((w + 1) * (h + 1), 0.0);
    for (std::size_t r = 0; r < h; ++r) {
        double row_sum = 0.0;
        for (std::size_t c = 0; c < w; ++c) {
            row_sum += field.at(r, c);
            sat[(r + 1) * (w + 1) + c + 1] = sat[r * (w + 1) + c + 1] + row_sum;
        }
    }
    ScalarField out(w, h);
    for (std::size_t r = 0; r < h; ++r) {
        const std::size_t r0 = r >= radius ? r - radius : 0;
        const std::size_t r1 = std::min(h, r + radius + 1);
        for (std::size_t c = 0; c < w; ++c) {
            const std::size_t c0 = c >= radius ? c - radius : 0;
            const std::size_t c1 = std::min(w, c + radius + 1);
            const double sum = sat[r1 * (w + 1) + c1] - sat[r0 * (w + 1) + c1] -
                               sat[r1 * (w + 1) + c0] + sat[r0 * (w + 1) + c0];
            out.at(r, c) = sum / static_cast<double>((r1 - r0) * (c1 - c0));
        }
    }
    return out;
}

ScalarField guided_filter(const ScalarField& guide, const ScalarField& input,
                          std::size_t radius, double reg) {
    if (!guide.same_shape(input)) throw InvalidInput("guided_filter: shape mismatch");
    if (radius < 1) throw InvalidInput("guided_filter: radius must be at least 1");
    if (!(reg > 0.0)) throw InvalidInput("guided_filter: reg must be positive");

    const std::size_t n = guide.size();
    ScalarField gg(guide.width(), guide.height());
    ScalarField gi(guide.width(), guide.height());
    for (std::size_t i = 0; i < n; ++i) {
        gg[i] = guide[i] * guide[i];
        gi[i] = guide[i] * input[i];
    }
    const ScalarField mean_g = box_mean(guide, radius);
    const ScalarField mean_i = box_mean(input, radius);
    const ScalarField mean_gg = box_mean(gg, radius);
    const ScalarField mean_gi = box_mean(gi, radius);

    ScalarField a(guide.width(), guide.height());
    ScalarField b(guide.width(), guide.height());
    for (std::size_t i = 0; i < n; ++i) {
        const double var = mean_gg[i] - mean_g[i] * mean_g[i];
        const double cov = mean_gi[i] - mean_g[i] * mean_i[i];
        a[i] = cov / (var + reg);
        b[i] = mean_i[i] - a[i] * mean_g[i];
    }
    const ScalarField mean_a = box_mean(a, radius);
    const ScalarField mean_b = box_mean(b, radius);

    ScalarField out(guide.width(), guide.height());
    for (std::size_t i = 0; i < n; ++i) out[i] = mean_a[i] * guide[i] + mean_b[i];
    return out;
}

ScalarField luminance(const ImageBuffer& image) {
    if (image.channels() == 1) return image.channel(0);
    ScalarField out(image.width(), image.height());
    for (std::size_t i = 0; i < image.pixel_count(); ++i) {
        const auto px = image.data().subspan(i * 3, 3);
        out[i] = 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
    }
    return out;
}

TransmissionMap refine_transmission(const ImageBuffer& image, const TransmissionMap& t_raw,
                                    std::size_t radius, double reg) {
    if (image.width() != t_raw.width() || image.height() != t_raw.height()) {
        throw InvalidInput("refine_transmission: shape mismatch");
    }
    ScalarField refined = guided_filter(luminance(image), t_raw.field(), radius, reg);
    return TransmissionMap(clamp01(refined));
}

}  // namespace hazepde
