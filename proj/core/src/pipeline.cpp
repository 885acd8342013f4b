#include "hazepde/pipeline.hpp"

#include <array>
#include <utility>

#include "hazepde/operators.hpp"
#include "hazepde/refine.hpp"

namespace hazepde {

namespace {

constexpr std::array<std::pair<Ablation, std::string_view>, 7> kNames{{
    {Ablation::none, "none"},
    {Ablation::no_pde, "no-pde"},
    {Ablation::no_nonlocal, "no-nonlocal"},
    {Ablation::no_adaptive, "no-adaptive"},
    {Ablation::no_edge, "no-edge"},
    {Ablation::no_guided, "no-guided"},
    {Ablation::no_multiscale, "no-multiscale"},
}};

}  // namespace

std::string_view to_string(Ablation a) noexcept {
    for (const auto& [value, name] : kNames) {
        if (value == a) return name;
    }
    return "unknown";
}

std::optional<Ablation> parse_ablation(std::string_view name) noexcept {
    for (const auto& [value, spelled] : kNames) {
        if (spelled == name) return value;
    }
    return std::nullopt;
}

DehazeResult dehaze(const ImageBuffer& image, const SolverConfig& cfg, Ablation ablation) {
    cfg.validate();
    if (!image.all_finite()) throw InvalidInput("dehaze: image contains non-finite values");

    std::vector<std::size_t> radii = cfg.scales;
    std::vector<double> weights = cfg.scale_weights;
    if (ablation == Ablation::no_multiscale) {
        radii = {cfg.patch_radius};
        weights = {1.0};
    }

    // Unnormalized pass picks the airlight, the normalized pass drives t.
    const AtmosphericLight unit = AtmosphericLight::uniform(image.channels(), 1.0);
    const ScalarField dark_raw = multiscale_dark_channel(image, unit, radii, weights);
    const AtmosphericLight airlight =
        estimate_atmospheric_light(image, dark_raw, cfg.airlight_fraction);
    const ScalarField dark = multiscale_dark_channel(image, airlight, radii, weights);
    TransmissionMap t = estimate_transmission(dark, cfg.omega);
    if (ablation != Ablation::no_guided) {
        t = refine_transmission(image, t, cfg.refine_radius, cfg.refine_reg);
    }

    const ImageBuffer phi = reconstruct(image, t, airlight, cfg.t_floor);
    DehazeResult result{ImageBuffer{}, {airlight, t, ScalarField{}, {}}};
    if (ablation == Ablation::no_pde) {
        result.image = clamp01(phi);
        return result;
    }

    ScalarField lambda_map;
    switch (ablation) {
        case Ablation::no_nonlocal:
            lambda_map = ScalarField(image.width(), image.height(), 0.0);
            break;
        case Ablation::no_adaptive:
            lambda_map = ScalarField(image.width(), image.height(), cfg.lambda0);
            break;
        default:
            lambda_map = adaptive_lambda(t, cfg.lambda0, cfg.beta, cfg.lambda_monotonicity);
            break;
    }

    SolverConfig channel_cfg = cfg;
    if (ablation == Ablation::no_edge) channel_cfg.diffusivity = Diffusivity::linear;

    ImageBuffer restored(image.width(), image.height(), image.channels());
    for (std::size_t c = 0; c < image.channels(); ++c) {
        ChannelSolution sol = solve_fixed_point(phi.channel(c), lambda_map, channel_cfg);
        restored.set_channel(c, sol.u);
        result.diagnostics.traces.push_back(std::move(sol.trace));
    }
    result.diagnostics.lambda_map = std::move(lambda_map);
    result.image = clamp01(restored);
    return result;
}

}  // namespace hazepde
