#include <benchmark/benchmark.h>

#include "isolab/iso/isotropy.hpp"
#include "isolab/theories/constructions.hpp"

using namespace isolab;
using theories::DataKind;

namespace {

void BM_BruteMonoid(benchmark::State& state) {
  const auto m = theories::with_zero(theories::cyclic_group(4).monoid);
  const auto engine = iso::make_isotropy_engine({DataKind::Monoid, m});
  for (auto _ : state) benchmark::DoNotOptimize(iso::brute_force_isotropy(*engine, {2, 7}));
}
BENCHMARK(BM_BruteMonoid)->Unit(benchmark::kMillisecond);

void BM_BruteGroup(benchmark::State& state) {
  const auto engine = iso::make_isotropy_engine({DataKind::Group, theories::symmetric_group3()});
  for (auto _ : state) benchmark::DoNotOptimize(iso::brute_force_isotropy(*engine, {1, 3}));
}
BENCHMARK(BM_BruteGroup)->Unit(benchmark::kMillisecond);

void BM_BruteNabla(benchmark::State& state) {
  const auto c = theories::delta_nabla(theories::full_transformation2(), theories::Variant::Indiscrete);
  const auto engine = iso::make_isotropy_engine({DataKind::StrMonCat, c});
  for (auto _ : state) benchmark::DoNotOptimize(iso::brute_force_isotropy(*engine, {2, 7}));
}
BENCHMARK(BM_BruteNabla)->Unit(benchmark::kMillisecond);

void BM_GroupIsomorphism(benchmark::State& state) {
  const auto g = iso::GroupTable::from_group(theories::product(theories::symmetric_group3(),
                                                               theories::cyclic_group(4)));
  for (auto _ : state) benchmark::DoNotOptimize(iso::group_isomorphism(g, g));
}
BENCHMARK(BM_GroupIsomorphism);

}  // namespace
