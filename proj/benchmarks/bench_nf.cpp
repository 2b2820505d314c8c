#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "isolab/nf/algebra.hpp"
#include "isolab/nf/rewrite.hpp"
#include "isolab/theories/constructions.hpp"

using namespace isolab;
using theories::DataKind;

namespace {

// A random word with `len` tokens over the elements of m and x.
std::string random_word(const theories::FiniteMonoid& m, std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m.size());
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t k = pick(rng);
    s += (i ? " " : "") + (k == m.size() ? std::string("x") : m.elements[k]);
  }
  return s;
}

void monoid_rewrite(benchmark::State& state, nf::Strategy strategy) {
  const auto t2 = theories::full_transformation2();
  const auto engine = nf::make_engine(nf::EngineKind::Monoid, {DataKind::Monoid, t2});
  const phl::Term t = engine->parse(random_word(t2, static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(engine->normalize(t, strategy));
  state.SetComplexityN(state.range(0));
}

void BM_RewriteInnermost(benchmark::State& state) { monoid_rewrite(state, nf::Strategy::LeftmostInnermost); }
void BM_RewriteOutermost(benchmark::State& state) { monoid_rewrite(state, nf::Strategy::RightmostOutermost); }
BENCHMARK(BM_RewriteInnermost)->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_RewriteOutermost)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_MonoidAlgebraMul(benchmark::State& state) {
  const auto s3 = theories::symmetric_group3().monoid;
  const nf::MonoidAlgebra alg(s3);
  const auto engine = nf::make_engine(nf::EngineKind::Monoid, {DataKind::Monoid, s3});
  const auto u = std::get<nf::MonoidNF>(*engine->reduce(engine->parse(random_word(s3, 64, 2))));
  const auto v = std::get<nf::MonoidNF>(*engine->reduce(engine->parse(random_word(s3, 64, 3))));
  for (auto _ : state) benchmark::DoNotOptimize(alg.subst(u, v));
}
BENCHMARK(BM_MonoidAlgebraMul);

void BM_SmcArrowReduce(benchmark::State& state) {
  const auto c = theories::delta_nabla(theories::cyclic_group(3).monoid, theories::Variant::Indiscrete);
  const auto engine = nf::make_engine(nf::EngineKind::SmcArrow, {DataKind::StrMonCat, c});
  const phl::Term t = engine->parse(
      "comp(tensor_A(id(cod(x_A)), tensor_A(x_A, id(1))), tensor_A(x_A, tensor_A(id(dom(x_A)), id(1))))");
  for (auto _ : state) benchmark::DoNotOptimize(engine->reduce(t));
}
BENCHMARK(BM_SmcArrowReduce);

}  // namespace
