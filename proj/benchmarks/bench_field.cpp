// Throughput of the packed field tables and the polynomial kernels built
// on them.  Operand streams are fixed-seed random so runs are comparable
// across machines and commits.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "cyclica/field.hpp"
#include "cyclica/poly.hpp"
#include "cyclica/ring.hpp"

using namespace cyclica;

namespace {

std::vector<ff_t> operands(const Field& f, std::size_t count,
                           std::uint64_t seed, bool nonzero) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(nonzero ? 1 : 0,
                                                      f.size() - 1);
    std::vector<ff_t> v(count);
    for (auto& x : v) x = static_cast<ff_t>(pick(rng));
    return v;
}

void BM_FieldMul(benchmark::State& state, std::uint64_t ell, unsigned r) {
    Field f = r == 1 ? Field::prime_field(ell) : Field::extension(ell, r);
    auto a = operands(f, 4096, 1, false);
    auto b = operands(f, 4096, 2, false);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.mul(a[i & 4095], b[i & 4095]));
        ++i;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_FieldMul, f3, 3, 1u);
BENCHMARK_CAPTURE(BM_FieldMul, f8, 2, 3u);
BENCHMARK_CAPTURE(BM_FieldMul, f256, 2, 8u);
BENCHMARK_CAPTURE(BM_FieldMul, f8192, 2, 13u);

void BM_FieldInv(benchmark::State& state, std::uint64_t ell, unsigned r) {
    Field f = r == 1 ? Field::prime_field(ell) : Field::extension(ell, r);
    auto a = operands(f, 4096, 3, true);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.inv(a[i & 4095]));
        ++i;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_FieldInv, f8192, 2, 13u);
BENCHMARK_CAPTURE(BM_FieldInv, f101, 101, 1u);

// Dense degree-63 product over F_8, the shape the annihilator builder
// multiplies all day.
void BM_PolyMul(benchmark::State& state) {
    Field f = Field::extension(2, 3);
    auto ca = operands(f, 64, 4, false);
    auto cb = operands(f, 64, 5, false);
    ca.back() = 1;
    cb.back() = 1;
    Poly a(f, ca), b(f, cb);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

// Full cyclic convolution in F_2[X]/(X^101 - 1).
void BM_CyclicConvolution(benchmark::State& state) {
    Ring ring = make_ring(Field::prime_field(2), 101);
    RingElem a(ring, operands(ring.field, 101, 6, false));
    RingElem b(ring, operands(ring.field, 101, 7, false));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclicConvolution);

}  // namespace
