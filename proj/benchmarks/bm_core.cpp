#include <benchmark/benchmark.h>

#include "residua/completion.hpp"
#include "residua/dsl.hpp"
#include "residua/poly_gf.hpp"
#include "residua/representatives.hpp"
#include "residua/split_ext.hpp"
#include "residua/suites.hpp"

using namespace residua;

static void BM_GfRing(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf_ring(q));
}
BENCHMARK(BM_GfRing)->Arg(16)->Arg(64)->Arg(256);

static void BM_MaximalIdeals(benchmark::State& state) {
    const Ring r = evaluate("prod(GF(2)[x]/(x^3),GF(2)[x]/(x^3+x))");
    for (auto _ : state) benchmark::DoNotOptimize(maximal_ideals(r));
}
BENCHMARK(BM_MaximalIdeals);

static void BM_AllIdeals(benchmark::State& state) {
    const Ring r = evaluate("GF(2)[x]/(x^6)");
    for (auto _ : state) benchmark::DoNotOptimize(all_ideals(r));
}
BENCHMARK(BM_AllIdeals);

static void BM_Subfields(benchmark::State& state) {
    const Ring r = evaluate("prod(GF(4),GF(16))");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subfields(r));
}
BENCHMARK(BM_Subfields);

static void BM_FindIsomorphism(benchmark::State& state) {
    const Ring a = evaluate("GF(2)[x]/(x^6+x+1)");
    const Ring b = gf_ring(64);
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_FindIsomorphism);

static void BM_InverseLimit(benchmark::State& state) {
    const Ring r = evaluate("GF(3)[x]/(x^4)");
    const Elem x = 3;
    const Ideal m = ideal_generated(r, std::span<const Elem>(&x, 1));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_limit(r, m));
}
BENCHMARK(BM_InverseLimit);

static void BM_SemidirectPair(benchmark::State& state) {
    const auto alg = unital_algebra(gf_ring(4), 2);
    for (auto _ : state) benchmark::DoNotOptimize(semidirect_pair(alg));
}
BENCHMARK(BM_SemidirectPair);

static void BM_Suite(benchmark::State& state) {
    SuiteOptions o;
    o.max_order = 32;
    for (auto _ : state) benchmark::DoNotOptimize(run_suite("lemma22", o));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
