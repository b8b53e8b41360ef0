#include <benchmark/benchmark.h>

#include <random>

#include "gammalat/arithmetic.hpp"
#include "gammalat/cohomology.hpp"
#include "gammalat/normal_form.hpp"
#include "gammalat/primes.hpp"

using namespace gammalat;

namespace {

void BM_YakovlevDiagram(benchmark::State& state) {
  const GroupParams g = GroupParams::make(3, static_cast<int>(state.range(0)));
  const GammaLattice m = random_unimodular_change(direct_sum(mab_lattice(g, 1, 0), permutation_lattice(g, 1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(yakovlev_diagram(m));
  state.SetLabel("rank " + std::to_string(m.rank()));
}
BENCHMARK(BM_YakovlevDiagram)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_YakovlevDiagramExact(benchmark::State& state) {
  const GroupParams g = GroupParams::make(3, static_cast<int>(state.range(0)));
  const GammaLattice m = random_unimodular_change(direct_sum(mab_lattice(g, 1, 0), permutation_lattice(g, 1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(yakovlev_diagram(m, TateMethod::Exact));
}
BENCHMARK(BM_YakovlevDiagramExact)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SmithForm(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-20, 20);
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(m));
}
BENCHMARK(BM_SmithForm)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_Isomorphism(benchmark::State& state) {
  const GroupParams g = GroupParams::make(3, 2);
  const YakovlevDiagram a = yakovlev_diagram(direct_sum(mab_lattice(g, 1, 0), mab_lattice(g, 1, 1)));
  const YakovlevDiagram b = yakovlev_diagram(random_unimodular_change(direct_sum(mab_lattice(g, 1, 1), mab_lattice(g, 1, 0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(diagram_isomorphic(a, b));
}
BENCHMARK(BM_Isomorphism)->Unit(benchmark::kMillisecond);

void BM_RecoverStructure(benchmark::State& state) {
  ExtensionDatum d;
  d.params = GroupParams::make(3, 2);
  d.r1 = 12;
  d.ramified.assign(static_cast<std::size_t>(state.range(0)), RamifiedPlace{3, 9});
  d.s_counts = {0, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(recover_structure(d));
}
BENCHMARK(BM_RecoverStructure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FindQualifying(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_qualifying(3, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_FindQualifying)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
