#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hazepde/image.hpp"
#include "hazepde/scattering.hpp"
#include "hazepde/solver.hpp"

namespace hazepde {

/// Single-stage knockouts for component studies. `none` runs the full model.
enum class Ablation {
    none,
    no_pde,         // return clamp01(phi) without iterating
    no_nonlocal,    // lambda = 0
    no_adaptive,    // lambda = lambda0 everywhere
    no_edge,        // D = 1
    no_guided,      // skip transmission refinement
    no_multiscale,  // single dark-channel radius cfg.patch_radius
};

inline constexpr Ablation kAllAblations[] = {
    Ablation::no_pde,  Ablation::no_nonlocal, Ablation::no_adaptive,
    Ablation::no_edge, Ablation::no_guided,   Ablation::no_multiscale,
};

[[nodiscard]] std::string_view to_string(Ablation a) noexcept;
/// Parses the CLI spelling ("no-pde", "no-edge", ...). Empty on unknown names.
[[nodiscard]] std::optional<Ablation> parse_ablation(std::string_view name) noexcept;

struct DehazeDiagnostics {
    AtmosphericLight airlight{std::vector<double>{1.0}};
    TransmissionMap transmission{ScalarField(1, 1, 1.0)};
    ScalarField lambda_map;
    std::vector<SolverTrace> traces;  // one per channel; empty for no_pde
};

struct DehazeResult {
    ImageBuffer image;
    DehazeDiagnostics diagnostics;
};

/// Dark channel -> airlight -> transmission -> guided refinement ->
/// per-channel fixed-point solve -> clamp.
[[nodiscard]] DehazeResult dehaze(const ImageBuffer& image, const SolverConfig& cfg = {},
                                  Ablation ablation = Ablation::none);

}  // namespace hazepde
