#include <benchmark/benchmark.h>

#include "toroflip/flipgraph.hpp"
#include "toroflip/forcing.hpp"
#include "toroflip/homology.hpp"
#include "toroflip/tilings.hpp"

using namespace toroflip;

namespace {

TorusSpec spec_arg(const benchmark::State& state) {
    return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), static_cast<int>(state.range(2))};
}

void BM_Enumerate(benchmark::State& state) {
    const Torus torus(spec_arg(state));
    std::size_t count = 0;
    for (auto _ : state) {
        const auto store = TilingStore::enumerate(torus);
        count = store.size();
        benchmark::DoNotOptimize(count);
    }
    state.counters["tilings"] = static_cast<double>(count);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}
BENCHMARK(BM_Enumerate)->Args({4, 4, 4})->Args({3, 10, 1})->Args({4, 8, 2})->Unit(benchmark::kMillisecond);

void BM_FlipGraph(benchmark::State& state) {
    const Torus torus(spec_arg(state));
    const auto store = TilingStore::enumerate(torus);
    for (auto _ : state) {
        const FlipGraph graph(torus, store, state.range(3) != 0, 1);
        benchmark::DoNotOptimize(graph.component_count());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * store.size()));
}
BENCHMARK(BM_FlipGraph)->Args({3, 10, 1, 0})->Args({3, 10, 1, 1})->Args({4, 8, 2, 0})->Unit(benchmark::kMillisecond);

void BM_Flux(benchmark::State& state) {
    const Torus torus(spec_arg(state));
    const auto store = TilingStore::enumerate(torus);
    const HomologyBasis basis(torus);
    const Tiling base = base_tiling(torus);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(flux(basis, store.tiling(i), base));
        i = (i + 1) % store.size();
    }
}
BENCHMARK(BM_Flux)->Args({4, 4, 4})->Args({3, 10, 1});

void BM_LadderSet(benchmark::State& state) {
    const Torus torus(spec_arg(state));
    const auto store = TilingStore::enumerate(torus);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ladder_set(torus, store.tiling(i)));
        i = (i + 1) % store.size();
    }
}
BENCHMARK(BM_LadderSet)->Args({4, 4, 4})->Args({3, 10, 1});

void BM_ForcingNumber(benchmark::State& state) {
    const Torus torus(spec_arg(state));
    const auto store = TilingStore::enumerate(torus);
    const ForcingSolver solver(torus);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.number(store.tiling(i)));
        i = (i + 7919) % store.size();
    }
}
BENCHMARK(BM_ForcingNumber)->Args({3, 10, 1})->Args({4, 10, 10})->Args({5, 4, 2})->Args({4, 6, 1});

void BM_ForcingSpectrum(benchmark::State& state) {
    const Torus torus(spec_arg(state));
    const auto store = TilingStore::enumerate(torus);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_of(forcing_numbers(torus, store, 1)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * store.size()));
}
BENCHMARK(BM_ForcingSpectrum)->Args({3, 10, 1})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
