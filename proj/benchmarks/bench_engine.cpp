#include <benchmark/benchmark.h>

#include "topvert/fock.hpp"
#include "topvert/fock_checks.hpp"
#include "topvert/hodge.hpp"
#include "topvert/kp.hpp"
#include "topvert/oracles.hpp"
#include "topvert/ribbon.hpp"
#include "topvert/symmetric.hpp"
#include "topvert/vertex.hpp"

namespace {

using namespace topvert;

// Memo tables are cleared per iteration so the timings measure computation, not lookups.

void BM_Character(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto parts = partitions_of(d);
    for (auto _ : state) {
        long long sum = 0;
        for (const auto& a : parts)
            for (const auto& b : parts) sum += character(a, b);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size() * parts.size()));
}
BENCHMARK(BM_Character)->DenseRange(4, 8, 2);

void BM_SchurShifted(benchmark::State& state) {
    const int window = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_symmetric_caches();
        benchmark::DoNotOptimize(schur_spec(Partition{3, 2, 1}, Specialization::shifted(Partition{2, 1}), window));
    }
}
BENCHMARK(BM_SchurShifted)->Arg(40)->Arg(80)->Arg(160);

void BM_VertexC(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto triples = triples_up_to(w);
    for (auto _ : state) {
        clear_symmetric_caches();
        for (const auto& t : triples)
            if (t.weight() == w) benchmark::DoNotOptimize(vertex_C(t, 80));
    }
}
BENCHMARK(BM_VertexC)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedFormCoefficient(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto triples = triples_up_to(w);
    for (auto _ : state) {
        clear_symmetric_caches();
        for (const auto& t : triples)
            if (t.weight() == w) benchmark::DoNotOptimize(lllz_coefficient(t, 80));
    }
}
BENCHMARK(BM_ClosedFormCoefficient)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FockVertex(benchmark::State& state) {
    const PartitionTriple mu{Partition{2}, Partition{1}, Partition{1}};
    for (auto _ : state) {
        FockContext ctx;
        benchmark::DoNotOptimize(vertex_C_via_fock(ctx, mu, Rational(1)));
    }
}
BENCHMARK(BM_FockVertex)->Unit(benchmark::kMillisecond);

void BM_FockMatrixElementG(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    const auto parts = partitions_up_to(w);
    for (auto _ : state) {
        FockEngine e(FockConfig{});
        for (const auto& lam : parts)
            for (const auto& mu : parts) benchmark::DoNotOptimize(e.matrix_element(op::G(Partition{1}, 1), lam, mu));
    }
}
BENCHMARK(BM_FockMatrixElementG)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ExpGTable(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_symmetric_caches();
        benchmark::DoNotOptimize(expG_coefficients(Rational(1), {b, b, b}, HodgeConfig{}));
    }
}
BENCHMARK(BM_ExpGTable)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TauFunction(benchmark::State& state) {
    KpConfig cfg;
    cfg.degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_symmetric_caches();
        benchmark::DoNotOptimize(build_tau(1, cfg));
    }
}
BENCHMARK(BM_TauFunction)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_OracleLr(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const Partition a{w / 2, w - w / 2 - w / 4, w / 4};
        benchmark::DoNotOptimize(oracle::schur_expand(
            oracle::multiply(oracle::schur_poly(a, 2 * a.length()), oracle::schur_poly(a, 2 * a.length())),
            2 * a.length()));
    }
}
BENCHMARK(BM_OracleLr)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
