#include <benchmark/benchmark.h>

#include "shoda/group_spec.hpp"
#include "shoda/search.hpp"

using namespace shoda;

namespace {

void BM_Enumerate(benchmark::State& state, const char* spec) {
    for (auto _ : state) {
        FiniteGroup G = parse_group(spec);
        benchmark::DoNotOptimize(G.order());
    }
}
BENCHMARK_CAPTURE(BM_Enumerate, dicyclic48, "dicyclic:48");
BENCHMARK_CAPTURE(BM_Enumerate, sym6, "symmetric:6");

void BM_NormalSubgroups(benchmark::State& state, const char* spec) {
    FiniteGroup G = parse_group(spec);
    for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups_decreasing(G).size());
}
BENCHMARK_CAPTURE(BM_NormalSubgroups, sym4, "symmetric:4");
BENCHMARK_CAPTURE(BM_NormalSubgroups, dihedral48, "dihedral:48");

void BM_Lattice(benchmark::State& state, const char* spec) {
    FiniteGroup G = parse_group(spec);
    for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(G).size());
}
BENCHMARK_CAPTURE(BM_Lattice, sym4, "symmetric:4");
BENCHMARK_CAPTURE(BM_Lattice, elem32, "elementary_abelian:2^5");

void BM_Essp(benchmark::State& state, const char* spec) {
    FiniteGroup G = parse_group(spec);
    for (auto _ : state) {
        SearchReport rep = ext_strong_shoda_pairs(G);
        benchmark::DoNotOptimize(rep.sum_dim);
    }
}
BENCHMARK_CAPTURE(BM_Essp, q8, "dicyclic:8");
BENCHMARK_CAPTURE(BM_Essp, dihedral48, "dihedral:48");
BENCHMARK_CAPTURE(BM_Essp, sym4, "symmetric:4");

// The headline comparison: essp-first two-phase search vs the direct
// full-lattice scan, on a normally monomial input (lattice never built)
// and on S4 (both must build it).
void BM_SspEsspFirst(benchmark::State& state, const char* spec) {
    FiniteGroup G = parse_group(spec);
    for (auto _ : state) {
        SearchReport rep = strong_shoda_pairs(G);
        benchmark::DoNotOptimize(rep.sum_dim);
    }
}
BENCHMARK_CAPTURE(BM_SspEsspFirst, dihedral48, "dihedral:48");
BENCHMARK_CAPTURE(BM_SspEsspFirst, sym4, "symmetric:4");

void BM_SspDirect(benchmark::State& state, const char* spec) {
    FiniteGroup G = parse_group(spec);
    for (auto _ : state) {
        SearchReport rep = direct_strong_shoda_pairs(G);
        benchmark::DoNotOptimize(rep.sum_dim);
    }
}
BENCHMARK_CAPTURE(BM_SspDirect, dihedral48, "dihedral:48");
BENCHMARK_CAPTURE(BM_SspDirect, sym4, "symmetric:4");

void BM_PcisByEssp(benchmark::State& state, const char* spec) {
    FiniteGroup G = parse_group(spec);
    for (auto _ : state) benchmark::DoNotOptimize(pcis_by_essp(G).size());
}
BENCHMARK_CAPTURE(BM_PcisByEssp, q8, "dicyclic:8");
BENCHMARK_CAPTURE(BM_PcisByEssp, cyclic30, "cyclic:30");

}  // namespace

BENCHMARK_MAIN();
