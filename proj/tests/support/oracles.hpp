#pragma once

// Straight-line reference implementations used as test oracles. None of these
// call into the library's operator code; they only use its containers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hazepde/image.hpp"

namespace hazepde::oracle {

inline double dark_channel_at(const ImageBuffer& img, const std::vector<double>& a,
                              std::size_t row, std::size_t col, std::size_t radius) {
    const long h = static_cast<long>(img.height());
    const long w = static_cast<long>(img.width());
    const long rad = static_cast<long>(radius);
    double best = 1e300;
    for (long y = static_cast<long>(row) - rad; y <= static_cast<long>(row) + rad; ++y) {
        for (long x = static_cast<long>(col) - rad; x <= static_cast<long>(col) + rad; ++x) {
            if (y < 0 || y >= h || x < 0 || x >= w) continue;
            for (std::size_t k = 0; k < img.channels(); ++k) {
                best = std::min(best, img.at(static_cast<std::size_t>(y),
                                             static_cast<std::size_t>(x), k) / a[k]);
            }
        }
    }
    return std::min(best, 1.0);
}

inline ScalarField dark_channel(const ImageBuffer& img, const std::vector<double>& a,
                                std::size_t radius) {
    ScalarField out(img.width(), img.height());
    for (std::size_t r = 0; r < img.height(); ++r) {
        for (std::size_t c = 0; c < img.width(); ++c) {
            out.at(r, c) = dark_channel_at(img, a, r, c, radius);
        }
    }
    return out;
}

// Half-sample mirror, folded repeatedly until inside [0, n).
inline long mirror(long i, long n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - i - 1;
    }
    return i;
}

inline long wrap(long i, long n) { return ((i % n) + n) % n; }

// Direct 2-D summation with the sampled, renormalized kernel.
inline ScalarField gaussian_direct(const ScalarField& f, double sigma, long size,
                                   bool periodic = false) {
    const long rad = size / 2;
    double total = 0.0;
    for (long dy = -rad; dy <= rad; ++dy) {
        for (long dx = -rad; dx <= rad; ++dx) {
            total += std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
        }
    }
    const long h = static_cast<long>(f.height());
    const long w = static_cast<long>(f.width());
    ScalarField out(f.width(), f.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            double acc = 0.0;
            for (long dy = -rad; dy <= rad; ++dy) {
                for (long dx = -rad; dx <= rad; ++dx) {
                    const double k = std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma)) / total;
                    const long y = periodic ? wrap(r + dy, h) : mirror(r + dy, h);
                    const long x = periodic ? wrap(c + dx, w) : mirror(c + dx, w);
                    acc += k * f.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
                }
            }
            out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = acc;
        }
    }
    return out;
}

// Divergence evaluated face by face around each pixel. The centered
// difference at a border pixel falls back to the one-sided difference.
inline ScalarField divergence(const ScalarField& u, double eps, bool linear = false) {
    const long h = static_cast<long>(u.height());
    const long w = static_cast<long>(u.width());
    auto U = [&](long r, long c) {
        return u.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    };
    auto cy = [&](long r, long c) {
        const long up = std::max(r - 1, 0L);
        const long down = std::min(r + 1, h - 1);
        return (U(down, c) - U(up, c)) / static_cast<double>(down - up);
    };
    auto cx = [&](long r, long c) {
        const long left = std::max(c - 1, 0L);
        const long right = std::min(c + 1, w - 1);
        return (U(r, right) - U(r, left)) / static_cast<double>(right - left);
    };
    auto coef = [&](double gx, double gy) {
        return linear ? 1.0 : 1.0 / (std::sqrt(gx * gx + gy * gy) + eps);
    };
    // Flux through the face between (r,c) and (r,c+1).
    auto flux_x = [&](long r, long c) {
        const double gx = U(r, c + 1) - U(r, c);
        const double gy = (cy(r, c) + cy(r, c + 1)) / 2.0;
        return coef(gx, gy) * gx;
    };
    // Flux through the face between (r,c) and (r+1,c).
    auto flux_y = [&](long r, long c) {
        const double gy = U(r + 1, c) - U(r, c);
        const double gx = (cx(r, c) + cx(r + 1, c)) / 2.0;
        return coef(gx, gy) * gy;
    };
    ScalarField out(u.width(), u.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            double east = 0.0, west = 0.0, south = 0.0, north = 0.0;
            if (c + 1 < w) east = flux_x(r, c);
            if (c > 0) west = flux_x(r, c - 1);
            if (r + 1 < h) south = flux_y(r, c);
            if (r > 0) north = flux_y(r - 1, c);
            out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                (east - west) + (south - north);
        }
    }
    return out;
}

// -sum over interior faces of D * difference^2, the value <div(u), u> must equal.
inline double dissipation(const ScalarField& u, double eps) {
    const long h = static_cast<long>(u.height());
    const long w = static_cast<long>(u.width());
    auto U = [&](long r, long c) {
        return u.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    };
    auto cy = [&](long r, long c) {
        const long up = std::max(r - 1, 0L);
        const long down = std::min(r + 1, h - 1);
        return (U(down, c) - U(up, c)) / static_cast<double>(down - up);
    };
    auto cx = [&](long r, long c) {
        const long left = std::max(c - 1, 0L);
        const long right = std::min(c + 1, w - 1);
        return (U(r, right) - U(r, left)) / static_cast<double>(right - left);
    };
    double total = 0.0;
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c + 1 < w; ++c) {
            const double gx = U(r, c + 1) - U(r, c);
            const double gy = (cy(r, c) + cy(r, c + 1)) / 2.0;
            total -= gx * gx / (std::sqrt(gx * gx + gy * gy) + eps);
        }
    }
    for (long r = 0; r + 1 < h; ++r) {
        for (long c = 0; c < w; ++c) {
            const double gy = U(r + 1, c) - U(r, c);
            const double gx = (cx(r, c) + cx(r + 1, c)) / 2.0;
            total -= gy * gy / (std::sqrt(gx * gx + gy * gy) + eps);
        }
    }
    return total;
}

// Window mean with explicit loops over the clipped window.
inline double window_mean(const ScalarField& f, long row, long col, long rad) {
    const long h = static_cast<long>(f.height());
    const long w = static_cast<long>(f.width());
    double sum = 0.0;
    long count = 0;
    for (long y = row - rad; y <= row + rad; ++y) {
        for (long x = col - rad; x <= col + rad; ++x) {
            if (y < 0 || y >= h || x < 0 || x >= w) continue;
            sum += f.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
            ++count;
        }
    }
    return sum / static_cast<double>(count);
}

inline ScalarField guided_filter(const ScalarField& g, const ScalarField& p, long rad,
                                 double reg) {
    const long h = static_cast<long>(g.height());
    const long w = static_cast<long>(g.width());
    ScalarField a(g.width(), g.height());
    ScalarField b(g.width(), g.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            double sg = 0, sp = 0, sgg = 0, sgp = 0;
            long n = 0;
            for (long y = r - rad; y <= r + rad; ++y) {
                for (long x = c - rad; x <= c + rad; ++x) {
                    if (y < 0 || y >= h || x < 0 || x >= w) continue;
                    const double gv = g.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
                    const double pv = p.at(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
                    sg += gv;
                    sp += pv;
                    sgg += gv * gv;
                    sgp += gv * pv;
                    ++n;
                }
            }
            const double mg = sg / n, mp = sp / n;
            const double var = sgg / n - mg * mg;
            const double cov = sgp / n - mg * mp;
            const double av = cov / (var + reg);
            a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = av;
            b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = mp - av * mg;
        }
    }
    ScalarField out(g.width(), g.height());
    for (long r = 0; r < h; ++r) {
        for (long c = 0; c < w; ++c) {
            const auto rr = static_cast<std::size_t>(r), cc = static_cast<std::size_t>(c);
            out.at(rr, cc) = window_mean(a, r, c, rad) * g.at(rr, cc) + window_mean(b, r, c, rad);
        }
    }
    return out;
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs_diff(const ImageBuffer& a, const ImageBuffer& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

inline double dot(const ScalarField& a, const ScalarField& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace hazepde::oracle
