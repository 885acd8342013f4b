#include "hazepde/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace hazepde {

namespace {

double l2_norm(const ScalarField& f) {
    // Fixed left-to-right order keeps the norm independent of worker count.
    double sum = 0.0;
    for (double v : f.data()) sum += v * v;
    return std::sqrt(sum);
}

}  // namespace

void SolverConfig::validate() const {
    if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
    if (!(sigma > 0.0)) throw InvalidInput("sigma must be positive");
    if (kernel_size % 2 == 0) throw InvalidInput("kernel_size must be odd");
    if (!(lambda0 > 0.0)) throw InvalidInput("lambda0 must be positive");
    if (!(beta >= 0.0)) throw InvalidInput("beta must be nonnegative");
    if (!(tau > 0.0)) throw InvalidInput("tau must be positive");
    if (!(t_floor > 0.0)) throw InvalidInput("t_floor must be positive");
    if (!(omega > 0.0 && omega <= 1.0)) throw InvalidInput("omega must lie in (0, 1]");
    if (max_iters < 1) throw InvalidInput("max_iters must be at least 1");
    if (!(rel_tol > 0.0)) throw InvalidInput("rel_tol must be positive");
    if (scales.empty() || scales.size() != scale_weights.size()) {
        throw InvalidInput("scales and scale_weights must be nonempty and of equal length");
    }
    if (!(airlight_fraction > 0.0 && airlight_fraction <= 1.0)) {
        throw InvalidInput("airlight_fraction must lie in (0, 1]");
    }
    if (refine_radius < 1) throw InvalidInput("refine_radius must be at least 1");
    if (!(refine_reg > 0.0)) throw InvalidInput("refine_reg must be positive");
    if (workers < 1) throw InvalidInput("workers must be at least 1");
}

SolverDiverged::SolverDiverged(std::size_t iteration, const std::string& what)
    : std::runtime_error("iteration " + std::to_string(iteration) + ": " + what),
      iteration_(iteration) {}

ScalarField fixed_point_residual(const ScalarField& u, const ScalarField& phi,
                                 const ScalarField& lambda_map, const SolverConfig& cfg) {
    if (!u.same_shape(phi) || !u.same_shape(lambda_map)) {
        throw InvalidInput("fixed-point step: field shapes differ");
    }
    ScalarField r = divergence_term(u, cfg.epsilon, cfg.diffusivity, cfg.workers);
    const ScalarField g = gaussian_convolve(u, cfg.sigma, cfg.kernel_size,
                                            BoundaryMode::reflect, cfg.workers);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += phi[i] - lambda_map[i] * g[i];
    return r;
}

StepResult fixed_point_step(const ScalarField& u, const ScalarField& phi,
                            const ScalarField& lambda_map, const SolverConfig& cfg) {
    const ScalarField r = fixed_point_residual(u, phi, lambda_map, cfg);
    StepResult out{u, l2_norm(r)};
    for (std::size_t i = 0; i < r.size(); ++i) out.u[i] += cfg.tau * r[i];
    return out;
}

ChannelSolution solve_fixed_point(const ScalarField& phi, const ScalarField& lambda_map,
                                  const SolverConfig& cfg) {
    cfg.validate();
    if (!phi.same_shape(lambda_map)) throw InvalidInput("phi and lambda shapes differ");
    if (!phi.all_finite()) throw InvalidInput("phi contains non-finite values");

    ChannelSolution sol{phi, {}};
    sol.trace.tau_used = cfg.tau;
    sol.trace.tau_bound = tau_stability_bound(phi, lambda_map, cfg.epsilon, cfg.diffusivity);
    sol.trace.residual_norms.reserve(cfg.max_iters);

    for (std::size_t n = 1; n <= cfg.max_iters; ++n) {
        StepResult step = fixed_point_step(sol.u, phi, lambda_map, cfg);
        if (!std::isfinite(step.residual_norm) || !step.u.all_finite()) {
            throw SolverDiverged(n, "non-finite value in fixed-point iterate");
        }
        sol.u = std::move(step.u);
        sol.trace.residual_norms.push_back(step.residual_norm);
        sol.trace.iterations_run = n;
        if (n >= 2) {
            const double prev = sol.trace.residual_norms[n - 2];
            const double change = std::abs(step.residual_norm - prev) / std::max(prev, 1e-30);
            if (change <= cfg.rel_tol) {
                sol.trace.converged = true;
                break;
            }
        }
    }
    return sol;
}

ChannelSolution fixed_point_solve(const ScalarField& hazy_channel, const TransmissionMap& t,
                                  double airlight, const SolverConfig& cfg) {
    cfg.validate();
    const ScalarField phi = reconstruct_channel(hazy_channel, t, airlight, cfg.t_floor);
    const ScalarField lambda_map =
        adaptive_lambda(t, cfg.lambda0, cfg.beta, cfg.lambda_monotonicity);
    return solve_fixed_point(phi, lambda_map, cfg);
}

void write_trace_csv(std::ostream& out, const std::vector<SolverTrace>& traces) {
    out << "channel,iteration,residual_norm\n";
    const auto old_precision = out.precision(17);
    for (std::size_t ch = 0; ch < traces.size(); ++ch) {
        for (std::size_t n = 0; n < traces[ch].residual_norms.size(); ++n) {
            out << ch << ',' << (n + 1) << ',' << traces[ch].residual_norms[n] << '\n';
        }
    }
    out.precision(old_precision);
}

}  // namespace hazepde
