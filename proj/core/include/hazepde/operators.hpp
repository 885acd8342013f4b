#pragma once

#include <cstddef>
#include <vector>

#include "hazepde/image.hpp"
#include "hazepde/scattering.hpp"

namespace hazepde {

/// How the diffusion coefficient is formed at each cell face.
enum class Diffusivity {
    edge_preserving,  // D = 1 / (|grad u| + eps)
    linear,           // D = 1, plain Laplacian
};

/// Which exponent the adaptive lambda map uses.
enum class LambdaMonotonicity {
    as_printed,  // lambda0 * exp(-beta * (1 - t)), grows with t
    prose,       // lambda0 * exp(-beta * t), grows as t shrinks
};

enum class BoundaryMode {
    reflect,   // half-sample mirror: d c b a | a b c d | d c b a
    periodic,  // wrap-around
};

/// D(g) = 1 / (g + eps). Throws on negative g or non-positive eps.
[[nodiscard]] double diffusion_coefficient(double grad_magnitude, double epsilon);

/// Discrete div(D(grad u) grad u) on a unit grid using half-point fluxes.
///
/// The face between (r, c) and (r, c+1) carries D * (u[r][c+1] - u[r][c]),
/// where D is evaluated on the forward x-difference and the mean of the two
/// centered y-differences at the adjacent pixels (one-sided on the top and
/// bottom rows). Vertical faces mirror this. Faces on the image border carry
/// no flux, so the output sums to zero. Needs at least a 2x2 field.
[[nodiscard]] ScalarField divergence_term(const ScalarField& u, double epsilon,
                                          Diffusivity model = Diffusivity::edge_preserving,
                                          std::size_t workers = 1);

/// Largest face diffusivity divergence_term() would use on u.
[[nodiscard]] double max_face_diffusivity(const ScalarField& u, double epsilon,
                                          Diffusivity model = Diffusivity::edge_preserving);

/// Odd-size sampled Gaussian, normalized to unit sum.
struct GaussianKernel {
    std::size_t size = 0;
    double sigma = 0.0;
    std::vector<double> taps;     // separable 1-D factor, sums to 1
    std::vector<double> weights;  // size*size, row-major, sums to 1

    [[nodiscard]] std::size_t radius() const noexcept { return size / 2; }
    [[nodiscard]] double at(std::size_t dy, std::size_t dx) const noexcept {
        return weights[dy * size + dx];
    }
};

[[nodiscard]] GaussianKernel make_gaussian_kernel(double sigma, std::size_t kernel_size);

/// Maps an out-of-range index onto [0, n) using the given extension.
[[nodiscard]] std::size_t extend_index(std::ptrdiff_t i, std::size_t n, BoundaryMode mode);

/// G(u): convolution with make_gaussian_kernel(sigma, kernel_size),
/// evaluated separably.
[[nodiscard]] ScalarField gaussian_convolve(const ScalarField& field, double sigma,
                                            std::size_t kernel_size,
                                            BoundaryMode boundary = BoundaryMode::reflect,
                                            std::size_t workers = 1);

/// Pointwise lambda(t). Output lies in [lambda0 * e^-beta, lambda0].
[[nodiscard]] ScalarField adaptive_lambda(
    const TransmissionMap& t, double lambda0, double beta,
    LambdaMonotonicity monotonicity = LambdaMonotonicity::as_printed);

/// 2 / (8 * max D + max lambda * M) with M = 1: the step-size bound for the
/// explicit update, using the 5-point Laplacian's infinity-norm bound (8) and
/// the unit operator norm of a normalized nonnegative kernel.
[[nodiscard]] double tau_stability_bound(const ScalarField& u, const ScalarField& lambda_map,
                                         double epsilon,
                                         Diffusivity model = Diffusivity::edge_preserving);

}  // namespace hazepde
