#include "hazepde/metrics.hpp"

#include <cmath>

namespace hazepde {

double psnr_from_mse(double mse) {
    if (mse < 0.0) throw InvalidInput("mse must be nonnegative");
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / mse);
}

MetricReport compare(const ImageBuffer& a, const ImageBuffer& b) {
    if (!a.same_shape(b)) throw InvalidInput("compare: images differ in shape or channel count");
    double sq = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.data()[i] - b.data()[i];
        sq += d * d;
        abs_sum += std::abs(d);
    }
    const auto n = static_cast<double>(a.size());
    MetricReport report;
    report.mse = sq / n;
    report.mae = abs_sum / n;
    report.psnr = psnr_from_mse(report.mse);
    return report;
}

}  // namespace hazepde
