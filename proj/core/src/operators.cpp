#include "hazepde/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"

namespace hazepde {

namespace {

void require_min_grid(const ScalarField& u) {
    if (u.width() < 2 || u.height() < 2) {
        throw InvalidInput("diffusion operator needs a field of at least 2x2, got " +
                           std::to_string(u.width()) + "x" + std::to_string(u.height()));
    }
}

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
}

// Centered differences along x and y, one-sided on the outermost pixels.
struct CenteredDifferences {
    ScalarField dx;
    ScalarField dy;
};

CenteredDifferences centered_differences(const ScalarField& u) {
    const std::size_t w = u.width();
    const std::size_t h = u.height();
    CenteredDifferences d{ScalarField(w, h), ScalarField(w, h)};
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) {
            if (c == 0) {
                d.dx.at(r, c) = u.at(r, 1) - u.at(r, 0);
            } else if (c == w - 1) {
                d.dx.at(r, c) = u.at(r, c) - u.at(r, c - 1);
            } else {
                d.dx.at(r, c) = 0.5 * (u.at(r, c + 1) - u.at(r, c - 1));
            }
            if (r == 0) {
                d.dy.at(r, c) = u.at(1, c) - u.at(0, c);
            } else if (r == h - 1) {
                d.dy.at(r, c) = u.at(r, c) - u.at(r - 1, c);
            } else {
                d.dy.at(r, c) = 0.5 * (u.at(r + 1, c) - u.at(r - 1, c));
            }
        }
    }
    return d;
}

double face_diffusivity(double gx, double gy, double epsilon, Diffusivity model) {
    if (model == Diffusivity::linear) return 1.0;
    return 1.0 / (std::sqrt(gx * gx + gy * gy) + epsilon);
}

// Face fluxes: east[r][c] sits between (r,c) and (r,c+1); south[r][c]
// between (r,c) and (r+1,c).
struct FaceFluxes {
    ScalarField east;   // (w-1) x h
    ScalarField south;  // w x (h-1)
    double max_d = 0.0;
};

FaceFluxes face_fluxes(const ScalarField& u, double epsilon, Diffusivity model,
                       std::size_t workers) {
    const std::size_t w = u.width();
    const std::size_t h = u.height();
    const CenteredDifferences cd = centered_differences(u);
    FaceFluxes f{ScalarField(w - 1, h), ScalarField(w, h - 1), 0.0};
    std::vector<double> row_max(h, 0.0);
    detail::parallel_rows(h, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            double m = 0.0;
            for (std::size_t c = 0; c + 1 < w; ++c) {
                const double gx = u.at(r, c + 1) - u.at(r, c);
                const double gy = 0.5 * (cd.dy.at(r, c) + cd.dy.at(r, c + 1));
                const double d = face_diffusivity(gx, gy, epsilon, model);
                f.east.at(r, c) = d * gx;
                m = std::max(m, d);
            }
            if (r + 1 < h) {
                for (std::size_t c = 0; c < w; ++c) {
                    const double gy = u.at(r + 1, c) - u.at(r, c);
                    const double gx = 0.5 * (cd.dx.at(r, c) + cd.dx.at(r + 1, c));
                    const double d = face_diffusivity(gx, gy, epsilon, model);
                    f.south.at(r, c) = d * gy;
                    m = std::max(m, d);
                }
            }
            row_max[r] = m;
        }
    });
    f.max_d = *std::max_element(row_max.begin(), row_max.end());
    return f;
}

}  // namespace

double diffusion_coefficient(double grad_magnitude, double epsilon) {
    if (!(grad_magnitude >= 0.0)) throw InvalidInput("gradient magnitude must be nonnegative");
    require_epsilon(epsilon);
    return 1.0 / (grad_magnitude + epsilon);
}

ScalarField divergence_term(const ScalarField& u, double epsilon, Diffusivity model,
                            std::size_t workers) {
    require_min_grid(u);
    require_epsilon(epsilon);
    const std::size_t w = u.width();
    const std::size_t h = u.height();
    const FaceFluxes f = face_fluxes(u, epsilon, model, workers);
    ScalarField div(w, h);
    detail::parallel_rows(h, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                const double east = c + 1 < w ? f.east.at(r, c) : 0.0;
                const double west = c > 0 ? f.east.at(r, c - 1) : 0.0;
                const double south = r + 1 < h ? f.south.at(r, c) : 0.0;
                const double north = r > 0 ? f.south.at(r - 1, c) : 0.0;
                div.at(r, c) = (east - west) + (south - north);
            }
        }
    });
    return div;
}

double max_face_diffusivity(const ScalarField& u, double epsilon, Diffusivity model) {
    require_min_grid(u);
    require_epsilon(epsilon);
    return face_fluxes(u, epsilon, model, 1).max_d;
}

GaussianKernel make_gaussian_kernel(double sigma, std::size_t kernel_size) {
    if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
    if (kernel_size % 2 == 0) {
        throw InvalidInput("kernel size must be odd, got " + std::to_string(kernel_size));
    }
    GaussianKernel k;
    k.size = kernel_size;
    k.sigma = sigma;
    const auto radius = static_cast<std::ptrdiff_t>(kernel_size / 2);
    double sum = 0.0;
    for (std::ptrdiff_t d = -radius; d <= radius; ++d) {
        const double v = std::exp(-static_cast<double>(d * d) / (2.0 * sigma * sigma));
        k.taps.push_back(v);
        sum += v;
    }
    for (double& v : k.taps) v /= sum;
    k.weights.resize(kernel_size * kernel_size);
    for (std::size_t i = 0; i < kernel_size; ++i) {
        for (std::size_t j = 0; j < kernel_size; ++j) {
            k.weights[i * kernel_size + j] = k.taps[i] * k.taps[j];
        }
    }
    return k;
}

std::size_t extend_index(std::ptrdiff_t i, std::size_t n, BoundaryMode mode) {
    const auto len = static_cast<std::ptrdiff_t>(n);
    if (mode == BoundaryMode::periodic) {
        return static_cast<std::size_t>(((i % len) + len) % len);
    }
    const std::ptrdiff_t period = 2 * len;
    std::ptrdiff_t m = ((i % period) + period) % period;
    if (m >= len) m = period - 1 - m;
    return static_cast<std::size_t>(m);
}

ScalarField gaussian_convolve(const ScalarField& field, double sigma, std::size_t kernel_size,
                              BoundaryMode boundary, std::size_t workers) {
    const GaussianKernel k = make_gaussian_kernel(sigma, kernel_size);
    const std::size_t w = field.width();
    const std::size_t h = field.height();
    const auto radius = static_cast<std::ptrdiff_t>(k.radius());

    // Column offsets per output column are shared by every row.
    std::vector<std::size_t> col_index(w * kernel_size);
    for (std::size_t c = 0; c < w; ++c) {
        for (std::ptrdiff_t d = -radius; d <= radius; ++d) {
            col_index[c * kernel_size + static_cast<std::size_t>(d + radius)] =
                extend_index(static_cast<std::ptrdiff_t>(c) + d, w, boundary);
        }
    }

    ScalarField rows(w, h);
    detail::parallel_rows(h, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                double acc = 0.0;
                for (std::size_t j = 0; j < kernel_size; ++j) {
                    acc += k.taps[j] * field.at(r, col_index[c * kernel_size + j]);
                }
                rows.at(r, c) = acc;
            }
        }
    });

    ScalarField out(w, h);
    detail::parallel_rows(h, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                double acc = 0.0;
                for (std::ptrdiff_t d = -radius; d <= radius; ++d) {
                    const std::size_t src =
                        extend_index(static_cast<std::ptrdiff_t>(r) + d, h, boundary);
                    acc += k.taps[static_cast<std::size_t>(d + radius)] * rows.at(src, c);
                }
                out.at(r, c) = acc;
            }
        }
    });
    return out;
}

ScalarField adaptive_lambda(const TransmissionMap& t, double lambda0, double beta,
                            LambdaMonotonicity monotonicity) {
    if (!(lambda0 > 0.0)) throw InvalidInput("lambda0 must be positive");
    if (!(beta >= 0.0)) throw InvalidInput("beta must be nonnegative");
    ScalarField out(t.width(), t.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double haze = monotonicity == LambdaMonotonicity::as_printed ? 1.0 - t[i] : t[i];
        out[i] = lambda0 * std::exp(-beta * haze);
    }
    return out;
}

double tau_stability_bound(const ScalarField& u, const ScalarField& lambda_map, double epsilon,
                           Diffusivity model) {
    if (!u.same_shape(lambda_map)) throw InvalidInput("tau bound: shape mismatch");
    constexpr double kLaplacianNorm = 8.0;
    constexpr double kKernelNorm = 1.0;
    const double max_d = max_face_diffusivity(u, epsilon, model);
    const double max_lambda = std::max(lambda_map.max(), 0.0);
    return 2.0 / (kLaplacianNorm * max_d + max_lambda * kKernelNorm);
}

}  // namespace hazepde
