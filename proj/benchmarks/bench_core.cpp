#include <benchmark/benchmark.h>

#include <random>

#include "kdecomp/assembler.hpp"

using namespace kdecomp;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, Int bound) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_snf(benchmark::State& state) {
  std::mt19937 rng(42);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_matrix(rng, static_cast<std::size_t>(state.range(0)), 9));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_snf)->Arg(4)->Arg(5)->Arg(6);

void BM_enumerate_subgroups(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_subgroups(3, state.range(0), SubgroupFilter::all));
}
BENCHMARK(BM_enumerate_subgroups)->Arg(3)->Arg(5)->Arg(8);

void BM_decompose_laurent(benchmark::State& state) {
  RingTable table = RingTable::symbolic();
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose_laurent(state.range(0), 0, table, 3));
}
BENCHMARK(BM_decompose_laurent)->Arg(2)->Arg(3);

void BM_ft_oracle_compare(benchmark::State& state) {
  RingTable table = RingTable::symbolic();
  for (auto _ : state)
    benchmark::DoNotOptimize(ft_oracle_compare(state.range(0), 0, table, true, 3));
}
BENCHMARK(BM_ft_oracle_compare)->Arg(2)->Arg(3);

void BM_z2_swap_coinvariants(benchmark::State& state) {
  FGAbelianGroup g;
  g.free_rank = 1;
  g.torsion = {4};
  for (auto _ : state) benchmark::DoNotOptimize(dihedral_report(0, g));
}
BENCHMARK(BM_z2_swap_coinvariants);

void BM_mapping_torus(benchmark::State& state) {
  ChainComplex torus = torus_complex(3);
  ChainMap id = ChainMap::identity(torus);
  for (auto _ : state) benchmark::DoNotOptimize(mapping_torus_homology(torus, id));
}
BENCHMARK(BM_mapping_torus);

}  // namespace

BENCHMARK_MAIN();
