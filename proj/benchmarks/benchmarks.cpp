#include "sigsat/blocks.hpp"
#include "sigsat/counting.hpp"
#include "sigsat/decision.hpp"
#include "sigsat/dimacs.hpp"
#include "sigsat/generators.hpp"
#include "sigsat/oracle.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace sigsat;

namespace {

// Staircase instances have one singleton block per imbalance 1..n, so the
// flip-vector space at sigma0 = m is the distinct-partition lattice; this is
// the family where the counting machinery does real work.
void BM_CountPseudomodels(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Formula f = gen_staircase(n, 0, 1, 7);
    const auto d = decompose(occurrence_profile(f));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_pseudomodels(d, f.num_clauses()));
    }
}
BENCHMARK(BM_CountPseudomodels)->Arg(20)->Arg(40)->Arg(80);

void BM_FlipVectorEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Formula f = gen_staircase(n, 0, 1, 7);
    const auto d = decompose(occurrence_profile(f));
    for (auto _ : state) {
        std::size_t vectors = 0;
        for_each_flip_vector(d, f.num_clauses() - d.sigma_min,
                             [&](const FlipVector&) {
                                 ++vectors;
                                 return true;
                             });
        benchmark::DoNotOptimize(vectors);
    }
}
BENCHMARK(BM_FlipVectorEnumeration)->Arg(20)->Arg(40)->Arg(60);

// Summing counts across the whole upper sigma range touches every flip
// vector of every level; on a staircase that is all 2^n block subsets, so the
// sizes here stay deliberately small.
void BM_SatBound(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Formula f = gen_staircase(n, 1, 2, 7);
    const auto d = decompose(occurrence_profile(f));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sat_bound(d, f.num_clauses()));
    }
}
BENCHMARK(BM_SatBound)->Arg(12)->Arg(16);

void BM_OracleSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Formula f = gen_random(n, 3 * n, 1, 4, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_sigma_histogram(f, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_OracleSweep)->DenseRange(10, 18, 2);

void BM_DecideXsat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Formula f = gen_random(n, 2 * n, 1, 4, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_xsat(f));
    }
}
BENCHMARK(BM_DecideXsat)->Arg(12)->Arg(16)->Arg(20);

void BM_CountSatModels(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    const Formula f = gen_random(16, 24, 2, 4, 17);
    SearchOptions opts;
    opts.jobs = jobs;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_sat_models(f, opts));
    }
}
BENCHMARK(BM_CountSatModels)->Arg(1)->Arg(4);

void BM_PartitionExact(benchmark::State& state) {
    const Count rho = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_count_exact(rho));
    }
}
BENCHMARK(BM_PartitionExact)->Arg(100)->Arg(300)->Arg(1000);

void BM_ParseDimacs(benchmark::State& state) {
    const Formula f = gen_random(500, 2000, 2, 5, 19);
    const std::string text = to_dimacs(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_dimacs(text));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseDimacs);

} // namespace

BENCHMARK_MAIN();
