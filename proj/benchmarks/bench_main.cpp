#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "marstrand/dimension.hpp"
#include "marstrand/energy.hpp"
#include "marstrand/ifs.hpp"
#include "marstrand/projections.hpp"

using namespace marstrand;

namespace {

DiscreteMeasure cantor_sample(int depth) {
    return ifs_attractor_sample(cantor_middle_thirds(), depth, std::vector<double>{0.0});
}

void BM_energy_pairs(benchmark::State& state) {
    const auto mu = cantor_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(energy(mu, 0.63, 1e-9, 1));
    state.SetComplexityN(static_cast<std::int64_t>(mu.size()));
}
BENCHMARK(BM_energy_pairs)->Arg(8)->Arg(10)->Arg(12)->Complexity(benchmark::oNSquared);

void BM_energy_layercake(benchmark::State& state) {
    const auto mu = cantor_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(energy_layercake(mu, 0.63, 1e-9));
}
BENCHMARK(BM_energy_layercake)->Arg(8)->Arg(10);

void BM_box_dimension(benchmark::State& state) {
    const auto mu = cantor_sample(static_cast<int>(state.range(0)));
    std::vector<double> scales;
    for (int k = 2; k <= 8; ++k) scales.push_back(std::pow(3.0, -k));
    for (auto _ : state) benchmark::DoNotOptimize(box_dimension(mu.support, scales));
}
BENCHMARK(BM_box_dimension)->Arg(10)->Arg(12)->Arg(14);

void BM_pushforward(benchmark::State& state) {
    const auto c = cantor_sample(static_cast<int>(state.range(0)));
    const auto mu = product_measure(c, c);
    const auto family = planar_angle_family();
    const std::vector<double> lambda = {0.7};
    for (auto _ : state) benchmark::DoNotOptimize(pushforward(family, lambda, mu));
}
BENCHMARK(BM_pushforward)->Arg(6)->Arg(7)->Arg(8);

void BM_interval_measure(benchmark::State& state) {
    const auto c = cantor_sample(static_cast<int>(state.range(0)));
    const auto mu = product_measure(c, c);
    const auto nu = pushforward(planar_angle_family(), std::vector<double>{0.7}, mu);
    for (auto _ : state)
        benchmark::DoNotOptimize(interval_measure(nu.support, std::pow(3.0, -6)));
}
BENCHMARK(BM_interval_measure)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
