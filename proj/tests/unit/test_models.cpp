#include <gtest/gtest.h>

#include <random>

#include "isolab/error.hpp"
#include "isolab/models/diagram.hpp"
#include "isolab/models/homomorphism.hpp"
#include "isolab/models/io.hpp"
#include "isolab/models/semantics.hpp"
#include "isolab/phl/dsl.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/theories/constructions.hpp"
#include "isolab/theories/encode.hpp"

using namespace isolab;
using namespace isolab::models;
using theories::TheoryKind;

namespace {

std::shared_ptr<const phl::Theory> monoid_theory() { return theories::build_theory(TheoryKind::Monoid); }

// Z2 as a monoid model, optionally without the row mul(a, b).
PartialStructure z2(std::optional<std::pair<Elem, Elem>> drop = {}) {
  StructureBuilder b(monoid_theory(), "Z2");
  b.add_element("M", "0");
  b.add_element("M", "1");
  b.set("e", {}, "0");
  for (Elem x = 0; x < 2; ++x) {
    for (Elem y = 0; y < 2; ++y) {
      if (drop && drop->first == x && drop->second == y) continue;
      b.set(phl::OpId{1}, {x, y}, x ^ y);
    }
  }
  return std::move(b).build();
}

std::shared_ptr<const phl::Theory> magma_theory() {
  return std::make_shared<const phl::Theory>(
      phl::parse_theory("theory magma\nsort M;\nop mul : M, M -> M;\n"));
}

}  // namespace

TEST(Semantics, VariablesAndTables) {
  const PartialStructure m = z2();
  const auto& sig = m.signature();
  const phl::SortId s{0};
  const phl::Term x = phl::Term::variable("x", s);
  EXPECT_EQ(eval_term(m, x, {{"x", s}}, {1}), 1);
  const phl::Term t = phl::parse_term("mul(x, mul(x, e))", sig, {{"x", s}});
  EXPECT_EQ(eval_term(m, t, {{"x", s}}, {1}), 0);
}

TEST(Semantics, UndefinedIsStrict) {
  const PartialStructure m = z2(std::pair<Elem, Elem>{1, 1});
  const auto& sig = m.signature();
  const phl::SortId s{0};
  const phl::VarContext ctx{{"x", s}};
  // mul(1,1) is undefined, so is everything above it, even mul(_, e)-style wrappers
  EXPECT_EQ(eval_term(m, phl::parse_term("mul(x, x)", sig, ctx), ctx, {1}), kUndefined);
  EXPECT_EQ(eval_term(m, phl::parse_term("mul(mul(x, x), e)", sig, ctx), ctx, {1}), kUndefined);
  EXPECT_EQ(eval_term(m, phl::parse_term("mul(mul(x, x), e)", sig, ctx), ctx, {0}), 0);
}

TEST(Semantics, CompositionOutsideDomainIsUndefined) {
  const auto c = theories::encode(theories::delta_nabla(theories::cyclic_group(2).monoid,
                                                        theories::Variant::Discrete).cat);
  const auto& sig = c.signature();
  const phl::SortId a = *sig.find_sort("A");
  const phl::VarContext ctx{{"f", a}, {"g", a}};
  const phl::Term t = phl::parse_term("comp(f, g)", sig, ctx);
  const Elem f00 = *c.find_element(a, "0_0");
  const Elem f11 = *c.find_element(a, "1_1");
  EXPECT_EQ(eval_term(c, t, ctx, {f00, f11}), kUndefined);
  EXPECT_EQ(eval_term(c, t, ctx, {f11, f11}), f11);
}

TEST(Semantics, EquationWithUndefinedSidesFails) {
  const PartialStructure m = z2(std::pair<Elem, Elem>{1, 1});
  const phl::Theory t = phl::parse_theory(
      "theory t\nsort M;\nop e : -> M;\nop mul : M, M -> M;\n"
      "axiom forall x:M |- mul(x, x) = mul(x, x);\n"
      "axiom forall x:M |- x = x;\n");
  EXPECT_FALSE(holds(m, t.axioms[0]));
  EXPECT_TRUE(holds(m, t.axioms[1]));
  const auto env = find_counterexample(m, t.axioms[0]);
  ASSERT_TRUE(env.has_value());
  EXPECT_EQ(*env, Env{1});
}

TEST(Semantics, MissingRowBreaksTotality) {
  EXPECT_TRUE(check_model(z2()).ok());
  const ModelReport r = check_model(z2(std::pair<Elem, Elem>{0, 1}));
  ASSERT_FALSE(r.ok());
  bool totality = false;
  for (const auto& f : r.failures) totality |= f.axiom_text.find("def(mul(x, y))") != std::string::npos;
  EXPECT_TRUE(totality) << format_report(r);
}

TEST(Semantics, CheckModelAgreesWithHolds) {
  // random partial tables over {0, 1, 2}
  const auto th = monoid_theory();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> cell(-1, 2);
  for (int round = 0; round < 200; ++round) {
    StructureBuilder b(th);
    for (int i = 0; i < 3; ++i) b.add_element("M", std::to_string(i));
    if (int e = cell(rng); e >= 0) b.set(phl::OpId{0}, {}, e);
    for (Elem x = 0; x < 3; ++x) {
      for (Elem y = 0; y < 3; ++y) {
        if (int v = cell(rng); v >= 0) b.set(phl::OpId{1}, {x, y}, v);
      }
    }
    const PartialStructure m = std::move(b).build();
    const ModelReport r = check_model(m);
    std::vector<std::size_t> failing;
    for (std::size_t i = 0; i < th->axioms.size(); ++i) {
      if (!holds(m, th->axioms[i])) failing.push_back(i);
    }
    std::vector<std::size_t> reported;
    for (const auto& f : r.failures) reported.push_back(f.axiom);
    ASSERT_EQ(reported, failing) << print_model(m);
  }
}

TEST(Semantics, BuiltinConstructionsAreModels) {
  using namespace theories;
  const FiniteMonoid t2 = full_transformation2();
  EXPECT_TRUE(check_model(encode(t2)).ok());
  EXPECT_TRUE(check_model(encode(symmetric_group3())).ok());
  EXPECT_TRUE(check_model(encode(cyclic_group(3).monoid, TheoryKind::CMonoid)).ok());
  for (auto v : {Variant::Discrete, Variant::Indiscrete}) {
    EXPECT_TRUE(check_model(encode(delta_nabla(t2, v))).ok());
    EXPECT_TRUE(check_model(encode(delta_nabla(semilattice2(), v))).ok());
  }
  EXPECT_TRUE(check_model(encode(thin_monoidal(cyclic_group(4).monoid, {0, 2}, "thin"))).ok());
  EXPECT_TRUE(check_model(encode(chain(3))).ok());
  EXPECT_TRUE(check_model(encode(parallel_pair())).ok());
}

TEST(Semantics, IdentityOfUnitAxiom) {
  using namespace theories;
  const auto th = build_theory(TheoryKind::StrMonCat);
  std::string text = print_model(encode(delta_nabla(cyclic_group(2).monoid, Variant::Discrete)));
  // re-point I_A at the non-unit arrow
  const auto pos = text.find("row I_A -> 0_0");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 14, "row I_A -> 1_1");
  const ModelReport r = check_model(parse_model(text, th));
  bool found = false;
  for (const auto& f : r.failures) found |= f.axiom_text == "|- id(I_O) = I_A";
  EXPECT_TRUE(found) << format_report(r);
}

TEST(Semantics, PartialPresheafActionFailsTotality) {
  using namespace theories;
  const FiniteGroup z2g = cyclic_group(2);
  PresheafData p{"swap", classifying_category(z2g.monoid), {{"p", "q"}}, {{0, 1}, {1, 0}}};
  std::string text = print_model(encode(p));
  const std::string op = presheaf_op_name(p.category, 1);
  const std::string row = "row " + op + " p -> q\n";
  const auto pos = text.find(row);
  ASSERT_NE(pos, std::string::npos);
  text.erase(pos, row.size());
  const ModelReport r = check_model(parse_model(text, build_presheaf_theory(p.category)));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failures.front().axiom_text, "forall x:X_o |- def(" + op + "(x))");
}

TEST(ModelIo, RoundTrip) {
  const auto m = theories::encode(theories::delta_nabla(theories::full_transformation2(),
                                                        theories::Variant::Indiscrete));
  const std::string text = print_model(m);
  const PartialStructure back = parse_model(text, theories::build_theory(TheoryKind::StrMonCat));
  EXPECT_EQ(back, m);
  EXPECT_EQ(print_model(back), text);
  EXPECT_EQ(read_model_header(text).theory, "strmoncat");
}

TEST(ModelIo, Errors) {
  const auto th = monoid_theory();
  EXPECT_THROW(parse_model("model m\ntheory group\nelements M 0\n", th), Error);
  EXPECT_THROW(parse_model("model m\ntheory monoid\nelements M 0\nrow e -> 1\n", th), ParseError);
  EXPECT_THROW(parse_model("model m\ntheory monoid\nelements M 0\nrow e -> 0\nrow e -> 0 0\n", th),
               ParseError);
  EXPECT_THROW(parse_model("model m\ntheory monoid\nelements M 0 1\nrow e -> 0\nrow e -> 1\n", th), Error);
  EXPECT_THROW(parse_model("model m\ntheory monoid\nelements N 0\n", th), ParseError);
  // comments and blank lines are fine; absent rows are undefined
  const PartialStructure m =
      parse_model("# z1\nmodel m\ntheory monoid\n\nelements M 0  # one element\nrow e -> 0\n", th);
  EXPECT_EQ(m.carrier_size(phl::SortId{0}), 1u);
  EXPECT_EQ(m.domain_size(phl::OpId{1}), 0u);
}

TEST(Homomorphism, IdentityIsIso) {
  auto m = std::make_shared<const PartialStructure>(z2(std::pair<Elem, Elem>{1, 1}));
  const HomReport r = check_homomorphism(identity(m));
  EXPECT_EQ(r.cls, HomClass::Iso);
  EXPECT_TRUE(r.bijective);
}

TEST(Homomorphism, DiscreteIntoIndiscrete) {
  using namespace theories;
  const FiniteMonoid z = cyclic_group(2).monoid;
  auto d = std::make_shared<const PartialStructure>(encode(delta_nabla(z, Variant::Discrete).cat));
  auto n = std::make_shared<const PartialStructure>(encode(delta_nabla(z, Variant::Indiscrete).cat));
  const phl::SortId a{1};
  Homomorphism h{d, n, {{0, 1}, {*n->find_element(a, "0_0"), *n->find_element(a, "1_1")}}};
  const HomReport r = check_homomorphism(h);
  // composability is decided by dom/cod, which are preserved injectively,
  // so definedness is reflected; arrows are not onto
  EXPECT_EQ(r.cls, HomClass::HomReflecting);
  EXPECT_FALSE(r.bijective);
}

TEST(Homomorphism, BijectiveButNotReflecting) {
  const auto th = magma_theory();
  auto build = [&](bool extra) {
    StructureBuilder b(th);
    b.add_element("M", "a");
    b.add_element("M", "b");
    b.set(phl::OpId{0}, {0, 0}, 0);
    if (extra) b.set(phl::OpId{0}, {1, 1}, 1);
    return std::make_shared<const PartialStructure>(std::move(b).build());
  };
  const auto m = build(false);
  const auto n = build(true);
  const HomReport r = check_homomorphism({m, n, {{0, 1}}});
  EXPECT_EQ(r.cls, HomClass::Hom);
  EXPECT_TRUE(r.bijective);
  EXPECT_FALSE(r.witness.empty());
  // the other direction does not even preserve
  EXPECT_EQ(check_homomorphism({n, m, {{0, 1}}}).cls, HomClass::NotHom);
  EXPECT_FALSE(inverse_function({n, m, {{0, 0}}}).has_value());
}

TEST(Homomorphism, CompositionAndInverse) {
  auto m = std::make_shared<const PartialStructure>(z2());
  const Homomorphism swap{m, m, {{1, 0}}};
  // swapping 0 and 1 moves the unit, so it is not a monoid map
  EXPECT_EQ(check_homomorphism(swap).cls, HomClass::NotHom);
  const Homomorphism id = identity(m);
  const Homomorphism twice = compose(id, id);
  EXPECT_EQ(check_homomorphism(twice).cls, HomClass::Iso);
  const auto inv = inverse_function(swap);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(inv->maps, swap.maps);
  EXPECT_THROW(check_homomorphism({m, m, {{0}}}), Error);
}

TEST(Diagram, Naming) {
  using namespace theories;
  const Diagram d = diagram_theory(z2(), std::vector<phl::SortId>{phl::SortId{0}});
  const auto& sig = d.theory.signature;
  EXPECT_TRUE(sig.find_op("0").has_value());
  EXPECT_TRUE(sig.find_op("x").has_value());
  // 2 element constants defined, 1 e row, 4 mul rows
  EXPECT_EQ(d.theory.axioms.size(), monoid_theory()->axioms.size() + 2 + 1 + 4);

  const auto smc = encode(delta_nabla(cyclic_group(2).monoid, Variant::Discrete));
  const Diagram ds = diagram_theory(smc, std::vector<phl::SortId>{phl::SortId{1}});
  EXPECT_TRUE(ds.theory.signature.find_op("x_A").has_value());

  // an element id shared by two sorts is qualified by sort
  auto th = std::make_shared<phl::Theory>();
  th->name = "two";
  th->signature.add_sort("P");
  th->signature.add_sort("Q");
  StructureBuilder b(th);
  b.add_element("P", "k");
  b.add_element("Q", "k");
  const Diagram dq = diagram_theory(std::move(b).build());
  EXPECT_TRUE(dq.theory.signature.find_op("k@P").has_value());
  EXPECT_TRUE(dq.theory.signature.find_op("k@Q").has_value());
}
