#include <benchmark/benchmark.h>

#include <random>

#include "hazepde/hazepde.hpp"

namespace {

hazepde::ScalarField noise(std::size_t side) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    hazepde::ScalarField f(side, side);
    for (double& v : f.data()) v = dist(rng);
    return f;
}

hazepde::ImageBuffer noise_image(std::size_t side) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> dist(0.2, 0.9);
    hazepde::ImageBuffer img(side, side, 3);
    for (double& v : img.data()) v = dist(rng);
    return img;
}

void BM_Divergence(benchmark::State& state) {
    const auto u = noise(static_cast<std::size_t>(state.range(0)));
    const auto workers = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(hazepde::divergence_term(u, 1e-3, hazepde::Diffusivity::edge_preserving, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}
BENCHMARK(BM_Divergence)->Args({256, 1})->Args({256, 4})->Args({1024, 1})->Args({1024, 4});

void BM_Gaussian(benchmark::State& state) {
    const auto u = noise(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hazepde::gaussian_convolve(u, 2.0, 5));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}
BENCHMARK(BM_Gaussian)->Arg(256)->Arg(1024);

void BM_DarkChannel(benchmark::State& state) {
    const auto img = noise_image(static_cast<std::size_t>(state.range(0)));
    const auto a = hazepde::AtmosphericLight::uniform(3, 0.9);
    for (auto _ : state) benchmark::DoNotOptimize(hazepde::dark_channel(img, a, 7));
}
BENCHMARK(BM_DarkChannel)->Arg(256)->Arg(1024);

void BM_GuidedFilter(benchmark::State& state) {
    const auto g = noise(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hazepde::guided_filter(g, g, 30, 1e-3));
}
BENCHMARK(BM_GuidedFilter)->Arg(256);

void BM_Dehaze(benchmark::State& state) {
    const auto img = noise_image(static_cast<std::size_t>(state.range(0)));
    hazepde::SolverConfig cfg;
    cfg.workers = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(hazepde::dehaze(img, cfg));
}
BENCHMARK(BM_Dehaze)->Args({128, 1})->Args({128, 4})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
