#include <string>

#include <benchmark/benchmark.h>

#include "quotlat/decomposition.hpp"
#include "quotlat/lattice.hpp"
#include "quotlat/regex.hpp"

using namespace quotlat;

namespace {

// (a|b)*a(a|b)^k: the minimal DFA has 2^(k+1) states.
Nfa kth_from_last(int k) {
    std::string re = "(a|b)*a";
    for (int i = 0; i < k; ++i) {
        re += "(a|b)";
    }
    return parse_regex(re, Alphabet("ab"));
}

void BM_Minimize(benchmark::State& state) {
    const Nfa n = kth_from_last(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(n));
    }
    state.counters["states"] = static_cast<double>(minimize(n).num_states());
}
BENCHMARK(BM_Minimize)->DenseRange(1, 7, 2);

void BM_Decompose(benchmark::State& state) {
    const Nfa n = kth_from_last(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(n));
    }
}
BENCHMARK(BM_Decompose)->DenseRange(1, 5, 1);

void BM_BuildLattice(benchmark::State& state) {
    const auto d = decompose(kth_from_last(static_cast<int>(state.range(0))));
    const LatticeKind kind{LatticeOp::union_of, Side::left};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_lattice(d, kind));
    }
    state.counters["elements"] = static_cast<double>(build_lattice(d, kind).size());
}
BENCHMARK(BM_BuildLattice)->DenseRange(1, 3, 1);

void BM_VerifyDuality(benchmark::State& state) {
    const auto d = decompose(parse_regex("_|a|aa|ba", Alphabet("ab")));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_duality(d, DualityTheorem::unions));
        benchmark::DoNotOptimize(verify_duality(d, DualityTheorem::intersections));
    }
}
BENCHMARK(BM_VerifyDuality);

} // namespace
BENCHMARK_MAIN();
