#include <benchmark/benchmark.h>

#include "hesscalc/groebner.hpp"
#include "hesscalc/hessenberg.hpp"
#include "hesscalc/schubert.hpp"

namespace {

using namespace hesscalc;

void bm_schubert_full_group(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_schubert_cache();
        for (const Permutation& w : symmetric_group(n))
            benchmark::DoNotOptimize(schubert(w));
    }
}
BENCHMARK(bm_schubert_full_group)->Arg(5)->Arg(6)->Arg(7);

void bm_divided_difference(benchmark::State& state) {
    const IntPoly f = top_generator(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(divided_difference(f, 1));
}
BENCHMARK(bm_divided_difference)->Arg(6)->Arg(8)->Arg(10);

void bm_generator_chain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(generator_by_ddo_chain(n, 1, n));
}
BENCHMARK(bm_generator_chain)->Arg(5)->Arg(6)->Arg(7);

void bm_monk_expand(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<Permutation> group = symmetric_group(n);
    for (auto _ : state) {
        for (const Permutation& w : group)
            benchmark::DoNotOptimize(monk_expand(1, w));
    }
}
BENCHMARK(bm_monk_expand)->Arg(5)->Arg(6);

void bm_groebner_hessenberg(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> values(n, n);
    for (int j = 0; j < n - 1; ++j) values[j] = j + 2;
    const HessenbergFunction h(values);
    std::vector<RatPoly> gens;
    for (const IntPoly& g : ideal_generators(h)) gens.push_back(to_rational(g));
    for (auto _ : state)
        benchmark::DoNotOptimize(groebner(gens, n));
}
BENCHMARK(bm_groebner_hessenberg)->Arg(3)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
