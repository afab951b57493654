// The exact-distance walk is the hot loop of the whole suite: every
// nonzero message of a [p, k] code visited with one row update per step.
// Items processed counts messages walked, so rates read as messages/s.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <memory>

#include "cyclica/codes.hpp"
#include "cyclica/field.hpp"
#include "cyclica/ideals.hpp"
#include "cyclica/ring.hpp"

using namespace cyclica;

namespace {

// The full ring as a code: k = p, so the walk visits 2^p - 1 messages.
CyclicCode whole_ring_gf2(std::uint64_t p) {
    auto fact = std::make_shared<const Factorization>(
        factorize_xp1(make_ring(Field::prime_field(2), p)));
    std::uint64_t mask = (1ull << (fact->s + 1)) - 1;
    return code_from_ideal(ideal_from_mask(fact, mask));
}

void BM_GrayWalk(benchmark::State& state) {
    auto code = whole_ring_gf2(static_cast<std::uint64_t>(state.range(0)));
    DistanceOptions opt;
    opt.budget = 1ull << 30;
    opt.jobs = static_cast<unsigned>(state.range(1));
    std::uint64_t walked = 0;
    for (auto _ : state) {
        auto res = min_distance_exact(code, opt);
        benchmark::DoNotOptimize(res.distance);
        walked += res.enumerated;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(walked));
}
BENCHMARK(BM_GrayWalk)
    ->ArgNames({"p", "jobs"})
    ->Args({17, 1})
    ->Args({19, 1})
    ->Args({23, 1})
    ->Args({23, 4})
    ->UseRealTime()  // workers carry the load; CPU time of this thread lies
    ->Unit(benchmark::kMillisecond);

void BM_QrDistance(benchmark::State& state) {
    auto code = quadratic_residue_code(static_cast<std::uint64_t>(state.range(0)));
    DistanceOptions opt;
    std::uint64_t walked = 0;
    for (auto _ : state) {
        auto res = min_distance_exact(code, opt);
        benchmark::DoNotOptimize(res.distance);
        walked += res.enumerated;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(walked));
}
BENCHMARK(BM_QrDistance)->Arg(17)->Arg(23)->Arg(31);

// Sampling fallback for spaces too large to walk: QR(47) has 2^24
// messages, the bound draws 2000 of them.
void BM_DistanceUpper(benchmark::State& state) {
    auto code = quadratic_residue_code(47);
    DistanceOptions opt;
    opt.trials = 2000;
    opt.seed = 1;
    for (auto _ : state) {
        auto res = min_distance_upper(code, opt);
        benchmark::DoNotOptimize(res.distance);
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_DistanceUpper)->Unit(benchmark::kMillisecond);

// Generic odometer walk (non-binary field): F_3 whole ring at p = 11,
// 3^11 - 1 messages with incremental row updates.
void BM_OdometerWalk(benchmark::State& state) {
    auto fact = std::make_shared<const Factorization>(
        factorize_xp1(make_ring(Field::prime_field(3), 11)));
    std::uint64_t mask = (1ull << (fact->s + 1)) - 1;
    auto code = code_from_ideal(ideal_from_mask(fact, mask));
    DistanceOptions opt;
    opt.budget = 1ull << 30;
    std::uint64_t walked = 0;
    for (auto _ : state) {
        auto res = min_distance_exact(code, opt);
        benchmark::DoNotOptimize(res.distance);
        walked += res.enumerated;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(walked));
}
BENCHMARK(BM_OdometerWalk)->Unit(benchmark::kMillisecond);

}  // namespace
