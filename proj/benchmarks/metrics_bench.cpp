#include <benchmark/benchmark.h>

#include <random>

#include <tdats/diagram.hpp>
#include <tdats/metrics.hpp>

namespace {

tdats::PersistenceDiagram synthetic_diagram(std::size_t points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    tdats::PersistenceDiagram d;
    d.maxscale = 3.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double birth = uniform(rng);
        d.features.push_back({0, birth, birth + uniform(rng)});
    }
    d.sort_canonical();
    return d;
}

void BottleneckDistance(benchmark::State& state) {
    const auto a = synthetic_diagram(static_cast<std::size_t>(state.range(0)), 1);
    const auto b = synthetic_diagram(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tdats::bottleneck(a, b, 0));
    }
}
BENCHMARK(BottleneckDistance)->Arg(10)->Arg(40)->Arg(160);

void WassersteinDistance(benchmark::State& state) {
    const auto a = synthetic_diagram(static_cast<std::size_t>(state.range(0)), 3);
    const auto b = synthetic_diagram(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tdats::wasserstein(a, b, 1, 0));
    }
}
BENCHMARK(WassersteinDistance)->Arg(10)->Arg(40)->Arg(160);

}  // namespace
