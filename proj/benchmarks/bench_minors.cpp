// Vandermonde minor verification: integer determinants reduced modulo a
// fixed prime, with exact big-integer escalation only on a zero residue.
// Rates read as minors/s.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "cyclica/chebotarev.hpp"

using namespace cyclica;

namespace {

void BM_MinorSweepExhaustive(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t minors = 0;
    for (auto _ : state) {
        auto rep = chebotarev_sweep(p);
        benchmark::DoNotOptimize(rep.all_nonzero);
        minors += rep.minors_checked;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(minors));
}
BENCHMARK(BM_MinorSweepExhaustive)->Arg(5)->Arg(7);

void BM_MinorSweepRandom(benchmark::State& state) {
    auto p = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t minors = 0;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto rep = chebotarev_sweep_random(p, 5000, seed++);
        benchmark::DoNotOptimize(rep.all_nonzero);
        minors += rep.minors_checked;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(minors));
}
BENCHMARK(BM_MinorSweepRandom)->Arg(11)->Arg(17)->Arg(31);

// One fixed square size: all C(11,5)^2 = 213444 order-5 minors.
void BM_MinorSweepSize5(benchmark::State& state) {
    std::uint64_t minors = 0;
    for (auto _ : state) {
        auto rep = chebotarev_sweep_sizes(11, {5});
        benchmark::DoNotOptimize(rep.all_nonzero);
        minors += rep.minors_checked;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(minors));
}
BENCHMARK(BM_MinorSweepSize5)->Unit(benchmark::kMillisecond);

}  // namespace
