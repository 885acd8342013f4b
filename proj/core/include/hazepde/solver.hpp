#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hazepde/image.hpp"
#include "hazepde/operators.hpp"
#include "hazepde/scattering.hpp"

namespace hazepde {

/// Every tunable of the dehazing pipeline. Defaults are the published
/// settings; the rest fill in what the model leaves open.
struct SolverConfig {
    double epsilon = 1e-3;
    double sigma = 2.0;
    std::size_t kernel_size = 5;
    double lambda0 = 0.5;
    double beta = 3.0;
    double tau = 0.2;
    double t_floor = 0.1;
    double omega = 0.95;
    std::size_t patch_radius = 7;  // 15x15 patch
    std::size_t max_iters = 200;
    double rel_tol = 1e-4;
    LambdaMonotonicity lambda_monotonicity = LambdaMonotonicity::as_printed;
    Diffusivity diffusivity = Diffusivity::edge_preserving;

    std::vector<std::size_t> scales = kDefaultScales;
    std::vector<double> scale_weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    double airlight_fraction = 0.001;
    std::size_t refine_radius = 30;
    double refine_reg = 1e-3;

    /// Row-parallel workers inside each operator. Output does not depend on it.
    std::size_t workers = 1;

    /// Throws InvalidInput naming the first violated constraint.
    void validate() const;
};

/// Per-channel convergence record.
struct SolverTrace {
    std::vector<double> residual_norms;
    std::size_t iterations_run = 0;
    bool converged = false;
    double tau_used = 0.0;
    double tau_bound = 0.0;

    [[nodiscard]] bool tau_exceeds_bound() const noexcept { return tau_used > tau_bound; }
};

class SolverDiverged : public std::runtime_error {
public:
    SolverDiverged(std::size_t iteration, const std::string& what);
    [[nodiscard]] std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t iteration_;
};

struct StepResult {
    ScalarField u;
    double residual_norm = 0.0;
};

/// Residual r = div(D(grad u) grad u) - lambda * G(u) + phi.
[[nodiscard]] ScalarField fixed_point_residual(const ScalarField& u, const ScalarField& phi,
                                               const ScalarField& lambda_map,
                                               const SolverConfig& cfg);

/// One relaxed update u + tau * r, returning ||r||_2 alongside.
[[nodiscard]] StepResult fixed_point_step(const ScalarField& u, const ScalarField& phi,
                                          const ScalarField& lambda_map, const SolverConfig& cfg);

struct ChannelSolution {
    ScalarField u;
    SolverTrace trace;
};

/// Iterates from u0 = phi until the relative change of the residual norm
/// drops to cfg.rel_tol or cfg.max_iters steps have run.
[[nodiscard]] ChannelSolution solve_fixed_point(const ScalarField& phi,
                                                const ScalarField& lambda_map,
                                                const SolverConfig& cfg);

/// Builds phi and lambda for one channel and runs solve_fixed_point().
[[nodiscard]] ChannelSolution fixed_point_solve(const ScalarField& hazy_channel,
                                                const TransmissionMap& t, double airlight,
                                                const SolverConfig& cfg);

/// CSV with header "channel,iteration,residual_norm"; iterations count from 1.
void write_trace_csv(std::ostream& out, const std::vector<SolverTrace>& traces);

}  // namespace hazepde
