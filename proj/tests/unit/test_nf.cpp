#include <gtest/gtest.h>

#include <random>

#include "isolab/error.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/nf/algebra.hpp"
#include "isolab/nf/rewrite.hpp"
#include "isolab/theories/constructions.hpp"

using namespace isolab;
using namespace isolab::nf;
using theories::TaggedData;
using theories::DataKind;

namespace {

void dual_strategy(const TermEngine& engine, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  int defined = 0;
  for (int i = 0; i < count; ++i) {
    const phl::Term t = engine.random_term(rng, 12);
    ASSERT_LE(t.size(), 12u);
    const phl::Term a = engine.normalize(t, Strategy::LeftmostInnermost);
    const phl::Term b = engine.normalize(t, Strategy::RightmostOutermost);
    ASSERT_EQ(a, b) << engine.print(t) << "\n  LI: " << engine.print(a)
                    << "\n  RO: " << engine.print(b);
    const auto nf = engine.read_off(a);
    const auto direct = engine.evaluate(t);
    ASSERT_EQ(nf.has_value(), direct.has_value()) << engine.print(t);
    if (nf) {
      ++defined;
      ASSERT_EQ(*nf, *direct) << engine.print(t);
      ASSERT_EQ(engine.to_term(*nf), a) << engine.print(t);
    }
  }
  EXPECT_GT(defined, count / 10);
}

}  // namespace

TEST(Rewrite, DualStrategyAllEngines) {
  const auto z3 = theories::cyclic_group(3);
  const auto s3 = theories::symmetric_group3();
  const auto t2 = theories::full_transformation2();
  dual_strategy(*make_engine(EngineKind::Monoid, {DataKind::Monoid, t2}), 1, 1000);
  dual_strategy(*make_engine(EngineKind::CMonoid, {DataKind::CMonoid, z3.monoid}), 2, 1000);
  dual_strategy(*make_engine(EngineKind::Group, {DataKind::Group, s3}), 3, 1000);
  const auto nabla = theories::delta_nabla(z3.monoid, theories::Variant::Indiscrete);
  dual_strategy(*make_engine(EngineKind::SmcObject, {DataKind::StrMonCat, nabla}), 4, 1000);
  dual_strategy(*make_engine(EngineKind::SmcArrow, {DataKind::StrMonCat, nabla}), 5, 1000);
}

namespace {

std::string reduce_fmt(const TermEngine& e, std::string_view text,
                       Strategy s = Strategy::LeftmostInnermost) {
  const auto nf = e.reduce(e.parse(text), s);
  return nf ? e.format(*nf) : "undefined";
}

WordToken el(Elem a) { return {false, a, 0, 1}; }
WordToken gen(std::int32_t k, std::uint8_t g = 0) { return {true, 0, g, k}; }

}  // namespace

TEST(MonoidNf, CongruenceExample) {
  const auto t2 = theories::full_transformation2();
  const Elem m1 = *t2.find("10");
  const Elem m2 = *t2.find("00");
  const Elem m3 = t2.mul(m1, m2);
  const auto engine = make_engine(EngineKind::Monoid, {DataKind::Monoid, t2});
  const std::string n1 = t2.elements[m1], n2 = t2.elements[m2], n3 = t2.elements[m3];
  const auto a = engine->reduce(engine->parse("x " + n1 + " x " + n1 + " " + n2 + " x"));
  const auto b = engine->reduce(engine->parse("x e " + n1 + " e x e " + n3 + " x"));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(std::get<MonoidNF>(*a).parts, (std::vector<Elem>{t2.unit, m1, m3, t2.unit}));
}

TEST(MonoidNf, UnitAndSeam) {
  const auto z2 = theories::cyclic_group(2).monoid;
  const MonoidAlgebra alg(z2);
  EXPECT_EQ(alg.normalize({el(0)}), alg.unit());
  const MonoidNF u{{1, 1, 0}};
  EXPECT_EQ(alg.mul(u, alg.unit()), u);
  EXPECT_EQ(alg.mul(alg.unit(), u), u);
  // the seam multiplies the last part of u with the first part of v
  EXPECT_EQ(alg.mul(u, MonoidNF{{1, 1}}), (MonoidNF{{1, 1, 1, 1}}));
  EXPECT_EQ(alg.normalize({el(1), gen(2), el(1), el(1)}), (MonoidNF{{1, 0, 0}}));
  EXPECT_THROW(alg.normalize({gen(-1)}), Error);
  EXPECT_EQ(alg.format(MonoidNF{{0, 1}}), "0 x 1");
}

TEST(CMonoidNf, Collects) {
  const auto z2 = theories::cyclic_group(2).monoid;
  const auto engine = make_engine(EngineKind::CMonoid, {DataKind::CMonoid, z2});
  const auto nf = engine->reduce(engine->parse("1 x 1 x"));
  ASSERT_TRUE(nf);
  EXPECT_EQ(std::get<CMonoidNF>(*nf), (CMonoidNF{0, 2}));
  EXPECT_EQ(reduce_fmt(*engine, "x 1 x x"), "1 x^3");
}

TEST(GroupNf, CancellationAcrossUnit) {
  const auto z2 = theories::cyclic_group(2);
  const auto engine = make_engine(EngineKind::Group, {DataKind::Group, z2});
  EXPECT_EQ(reduce_fmt(*engine, "1 x 0 x^-1 1"), "0");
  EXPECT_EQ(reduce_fmt(*engine, "1 x x⁻¹ 1"), "0");

  const auto s3 = theories::symmetric_group3();
  const auto gs = make_engine(EngineKind::Group, {DataKind::Group, s3});
  // g x g⁻¹ is already normal: no rule applies to its canonical term
  const Elem g = *s3.monoid.find("120");
  const GroupNF conj{g, {{0, 1, s3.inv[static_cast<std::size_t>(g)]}}};
  std::vector<RewriteStep> trace;
  const phl::Term t = gs->to_term(conj);
  EXPECT_EQ(gs->normalize(t, Strategy::LeftmostInnermost, &trace), t);
  EXPECT_TRUE(trace.empty());
}

TEST(GroupNf, ShortWordsAgreeWithEvaluation) {
  // every word of length ≤ 4 over {0, 1, x, x⁻¹} in Z2 * <x>; the rewrite
  // engine, the stack normalizer and evaluation into S3 must agree
  const auto z2 = theories::cyclic_group(2);
  const auto s3 = theories::symmetric_group3();
  const GroupAlgebra alg(z2);
  const auto engine = make_engine(EngineKind::Group, {DataKind::Group, z2});
  const Elem swap = *s3.monoid.find("102");
  auto image = [&](const std::vector<WordToken>& w, Elem at) {
    Elem r = s3.unit();
    for (const WordToken& t : w) {
      if (!t.is_gen) {
        r = s3.mul(r, t.elem == 1 ? swap : s3.unit());
        continue;
      }
      const Elem v = t.exponent > 0 ? at : s3.inv[static_cast<std::size_t>(at)];
      for (int k = 0; k < std::abs(t.exponent); ++k) r = s3.mul(r, v);
    }
    return r;
  };
  const std::vector<WordToken> letters{el(0), el(1), gen(1), gen(-1)};
  const std::vector<std::string> names{"0", "1", "x", "x^-1"};
  std::size_t words = 0;
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<WordToken> w;
      std::string text;
      for (std::size_t i : idx) {
        w.push_back(letters[i]);
        text += (text.empty() ? "" : " ") + names[i];
      }
      const GroupNF direct = alg.normalize(w);
      const auto nf = engine->reduce(engine->parse(text));
      ASSERT_TRUE(nf) << text;
      ASSERT_EQ(std::get<GroupNF>(*nf), direct) << text;
      const auto back = alg.tokens(direct);
      for (Elem at = 0; at < 6; ++at) ASSERT_EQ(image(w, at), image(back, at)) << text;
      ++words;
      std::size_t i = 0;
      while (i < len && ++idx[i] == letters.size()) idx[i++] = 0;
      if (i == len) break;
    }
  }
  EXPECT_EQ(words, 4u + 16u + 64u + 256u);
}

TEST(GroupNf, FreeProductProperties) {
  const auto s3 = theories::symmetric_group3();
  const GroupAlgebra alg(s3);
  const GroupNF u = alg.normalize({el(1), gen(1), el(2), gen(1, 1), gen(-2)});
  EXPECT_EQ(alg.mul(u, alg.inv(u)), alg.unit());
  EXPECT_EQ(alg.mul(alg.inv(u), u), alg.unit());
  EXPECT_EQ(alg.degree(u), -1);
  EXPECT_EQ(alg.subst(u, alg.generic()), u);
  const GroupNF c = alg.constant(3);
  EXPECT_EQ(alg.degree(alg.subst(u, c)), 0);
}

TEST(SmcNf, WordOperationsInObjectContext) {
  const auto nabla = theories::delta_nabla(theories::cyclic_group(3).monoid,
                                           theories::Variant::Indiscrete);
  const SmcAlgebra alg(nabla);
  const auto& c = nabla.cat;
  const Elem f1 = *c.find_arrow("1_2");
  const Elem f2 = *c.find_arrow("0_2");
  const SmcWord f{SmcSort::Arrow, {f1, f2}, {SmcLetter::IdXO}};
  EXPECT_EQ(alg.dom(f), (SmcWord{SmcSort::Object, {1, 0}, {SmcLetter::XO}}));
  EXPECT_EQ(alg.cod(f), (SmcWord{SmcSort::Object, {2, 2}, {SmcLetter::XO}}));

  const SmcWord a{SmcSort::Object, {1, 2}, {SmcLetter::XO}};
  const SmcWord b{SmcSort::Object, {2, 1}, {SmcLetter::XO}};
  // (a1 x a2) ⊗ (b1 x b2) = a1 x (a2 ⊗ b1) x b2
  EXPECT_EQ(alg.tensor(a, b),
            (SmcWord{SmcSort::Object, {1, nabla.tensor_o(2, 2), 1}, {SmcLetter::XO, SmcLetter::XO}}));

  // different letter counts never compose
  const SmcWord one = alg.letter(SmcLetter::IdXO);
  const SmcWord two = alg.tensor(one, one);
  EXPECT_FALSE(alg.comp(one, two).has_value());
  EXPECT_TRUE(alg.comp(one, one).has_value());
}

TEST(SmcNf, WordOperationsInArrowContext) {
  const auto nabla = theories::delta_nabla(theories::cyclic_group(3).monoid,
                                           theories::Variant::Indiscrete);
  const SmcAlgebra alg(nabla);
  const auto& c = nabla.cat;
  const Elem f = *c.find_arrow("1_2");
  const Elem g = *c.find_arrow("0_1");
  const SmcWord w{SmcSort::Arrow, {f, g}, {SmcLetter::XA}};
  EXPECT_EQ(alg.dom(w), (SmcWord{SmcSort::Object, {1, 0}, {SmcLetter::DomXA}}));
  EXPECT_EQ(alg.cod(w), (SmcWord{SmcSort::Object, {2, 1}, {SmcLetter::CodXA}}));
  const SmcWord o{SmcSort::Object, {1, 2}, {SmcLetter::DomXA}};
  EXPECT_EQ(alg.id(o), (SmcWord{SmcSort::Arrow, {c.id[1], c.id[2]}, {SmcLetter::IdDomXA}}));
  // x_A never composes with itself: dom(x_A) and cod(x_A) are distinct
  const SmcWord x = alg.letter(SmcLetter::XA);
  EXPECT_FALSE(alg.comp(x, x).has_value());
  const auto left = alg.comp(alg.letter(SmcLetter::IdCodXA), x);
  ASSERT_TRUE(left.has_value());
  EXPECT_EQ(*left, x);
}

TEST(SmcNf, IdentityOfTensorIsTensorOfIdentities) {
  const auto nabla = theories::delta_nabla(theories::cyclic_group(3).monoid,
                                           theories::Variant::Indiscrete);
  for (auto kind : {EngineKind::SmcObject, EngineKind::SmcArrow}) {
    const auto e = make_engine(kind, {DataKind::StrMonCat, nabla});
    const auto lhs = e->reduce(e->parse("tensor_A(id(1), id(2))"));
    const auto rhs = e->reduce(e->parse("id(tensor_O(1, 2))"));
    ASSERT_TRUE(lhs && rhs);
    EXPECT_EQ(*lhs, *rhs);
  }
  const auto xa = make_engine(EngineKind::SmcArrow, {DataKind::StrMonCat, nabla});
  const auto l = xa->reduce(xa->parse("tensor_A(id(1), tensor_A(id(dom(x_A)), id(2)))"));
  const auto r = xa->reduce(xa->parse("id(tensor_O(1, tensor_O(dom(x_A), 2)))"));
  ASSERT_TRUE(l && r);
  EXPECT_EQ(*l, *r);
  // a composite of x_A with itself is stuck
  EXPECT_FALSE(xa->reduce(xa->parse("comp(x_A, x_A)")).has_value());
}

TEST(PresheafNf, GeneratorsAndConstants) {
  theories::PresheafData p{"pp", theories::parallel_pair(), {{"0", "1"}, {"0", "1", "2"}}, {}};
  const auto& j = p.category;
  p.maps.resize(j.arrow_count());
  p.maps[static_cast<std::size_t>(*j.find_arrow("ida"))] = {0, 1};
  p.maps[static_cast<std::size_t>(*j.find_arrow("idb"))] = {0, 1, 2};
  p.maps[static_cast<std::size_t>(*j.find_arrow("u"))] = {0, 1};
  p.maps[static_cast<std::size_t>(*j.find_arrow("v"))] = {1, 2};
  const PresheafAlgebra alg(p);
  const Elem u = *j.find_arrow("u");
  const Elem v = *j.find_arrow("v");
  const Elem ida = *j.find_arrow("ida");
  const PresheafNF x = alg.generic(0);
  EXPECT_EQ(alg.alpha(u, x), (PresheafNF{PresheafNF::Kind::Gen, 1, u}));
  EXPECT_NE(alg.alpha(u, x), alg.alpha(v, x));
  EXPECT_EQ(alg.alpha(u, alg.alpha(ida, x)), alg.alpha(u, x));
  EXPECT_EQ(alg.alpha(v, alg.constant(0, 1)), alg.constant(1, 2));

  const auto engine = make_engine(EngineKind::Presheaf, {DataKind::Presheaf, p}, "a");
  const auto& sig = engine->signature();
  const std::string xu = theories::presheaf_op_name(j, u) + "(" +
                         sig.op(engine->indeterminate()).name + ")";
  const auto nf = engine->reduce(engine->parse(xu));
  ASSERT_TRUE(nf);
  EXPECT_EQ(std::get<PresheafNF>(*nf), alg.alpha(u, x));
  dual_strategy(*engine, 9, 300);
}

TEST(Rewrite, TraceAndLimits) {
  const auto z2 = theories::cyclic_group(2).monoid;
  const auto engine = make_engine(EngineKind::Monoid, {DataKind::Monoid, z2});
  const phl::Term t = engine->parse("x 1 1 x");
  std::vector<RewriteStep> li, ro;
  const phl::Term a = engine->normalize(t, Strategy::LeftmostInnermost, &li);
  const phl::Term b = engine->normalize(t, Strategy::RightmostOutermost, &ro);
  EXPECT_EQ(a, b);
  ASSERT_FALSE(li.empty());
  EXPECT_EQ(li.back().result, a);
  EXPECT_EQ(ro.back().result, b);
  for (const auto& s : li) EXPECT_FALSE(s.rule.empty());
  EXPECT_THROW(engine->normalize(t, Strategy::LeftmostInnermost, nullptr, 0), InvariantViolation);
  EXPECT_EQ(parse_strategy("outermost"), Strategy::RightmostOutermost);
  EXPECT_EQ(parse_engine_kind("smc-xa"), EngineKind::SmcArrow);
  EXPECT_THROW(engine->parse("x y"), ParseError);
  EXPECT_THROW(engine->parse("x^-1"), ParseError);
}
