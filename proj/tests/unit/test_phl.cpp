#include <gtest/gtest.h>

#include "isolab/error.hpp"
#include "isolab/phl/dsl.hpp"
#include "isolab/theories/builtin.hpp"

using namespace isolab;
using namespace isolab::phl;

namespace {

Signature category_signature() {
  Signature sig;
  const SortId o = sig.add_sort("O");
  const SortId a = sig.add_sort("A");
  sig.add_op("dom", {a}, o);
  sig.add_op("cod", {a}, o);
  sig.add_op("id", {o}, a);
  sig.add_op("comp", {a, a}, a);
  return sig;
}

}  // namespace

TEST(Signature, RejectsDuplicateNames) {
  Signature sig;
  const SortId m = sig.add_sort("M");
  EXPECT_THROW(sig.add_sort("M"), Error);
  sig.add_op("mul", {m, m}, m);
  EXPECT_THROW(sig.add_op("mul", {m}, m), Error);
  EXPECT_EQ(sig.find_op("mul"), OpId{0});
  EXPECT_FALSE(sig.find_sort("N").has_value());
}

TEST(Term, InferSort) {
  const Signature sig = category_signature();
  const SortId o = *sig.find_sort("O");
  const SortId a = *sig.find_sort("A");
  const Term x = Term::variable("x", o);
  EXPECT_EQ(infer_sort(sig, x, {{"x", o}}), o);

  const Term f = Term::variable("f", a);
  const Term dom_f = Term::apply(*sig.find_op("dom"), {f});
  EXPECT_EQ(infer_sort(sig, dom_f, {{"f", a}}), o);

  const Term bad = Term::apply(*sig.find_op("comp"), {f, x});
  EXPECT_THROW(infer_sort(sig, bad, {{"f", a}, {"x", o}}), SortError);
  // undeclared variable
  EXPECT_THROW(infer_sort(sig, f, {}), SortError);
  // arity mismatch
  EXPECT_THROW(infer_sort(sig, Term::apply(*sig.find_op("dom"), {}), {}), SortError);
}

TEST(Term, Substitute) {
  Signature sig;
  const SortId m = sig.add_sort("M");
  const OpId f = sig.add_op("f", {m}, m);
  const OpId c = sig.add_op("c", {}, m);
  const Term x = Term::variable("x", m);
  const Term y = Term::variable("y", m);
  const Term fy = Term::apply(f, {y});

  EXPECT_EQ(substitute(sig, x, {{{"x", m}, fy}}), fy);
  EXPECT_EQ(substitute(sig, Term::apply(c), {{{"x", m}, fy}}), Term::apply(c));
  // simultaneous: x -> y, y -> x swaps
  const Term fx = Term::apply(f, {x});
  const Term swapped = substitute(sig, Term::apply(f, {fx}), {{{"x", m}, y}, {{"y", m}, x}});
  EXPECT_EQ(swapped, Term::apply(f, {fy}));
}

TEST(Term, SubstituteRejectsWrongSort) {
  const Signature sig = category_signature();
  const SortId o = *sig.find_sort("O");
  const SortId a = *sig.find_sort("A");
  const Term f = Term::variable("f", a);
  EXPECT_THROW(substitute(sig, f, {{{"f", a}, Term::variable("x", o)}}), SortError);
}

TEST(Term, ArrowIndeterminateAtIdentity) {
  // s_A[id(x_O)/x_A] for s_A = comp(id(cod(x_A)), x_A)
  const Signature sig = category_signature();
  const SortId o = *sig.find_sort("O");
  const SortId a = *sig.find_sort("A");
  const OpId id = *sig.find_op("id");
  const OpId cod = *sig.find_op("cod");
  const OpId comp = *sig.find_op("comp");
  const Term xa = Term::variable("x_A", a);
  const Term xo = Term::variable("x_O", o);
  const Term s = Term::apply(comp, {Term::apply(id, {Term::apply(cod, {xa})}), xa});
  const Term idx = Term::apply(id, {xo});
  const Term want = Term::apply(comp, {Term::apply(id, {Term::apply(cod, {idx})}), idx});
  EXPECT_EQ(substitute(sig, s, {{{"x_A", a}, idx}}), want);
  EXPECT_EQ(free_variables(want), (std::vector<TypedVar>{{"x_O", o}}));
}

TEST(Term, SizeAndOrder) {
  Signature sig;
  const SortId m = sig.add_sort("M");
  const OpId mul = sig.add_op("mul", {m, m}, m);
  const Term x = Term::variable("x", m);
  const Term t = Term::apply(mul, {x, Term::apply(mul, {x, x})});
  EXPECT_EQ(t.size(), 5u);
  EXPECT_NE(t, Term::apply(mul, {Term::apply(mul, {x, x}), x}));
  EXPECT_TRUE(x < t || t < x);
}

TEST(Dsl, MonoidTheory) {
  const Theory t = parse_theory(theories::theory_source(theories::TheoryKind::Monoid));
  EXPECT_EQ(t.signature.sort_count(), 1u);
  EXPECT_EQ(t.signature.op_count(), 2u);
  EXPECT_EQ(t.axioms.size(), 5u);
}

TEST(Dsl, StrictMonoidalTheory) {
  const Theory t = parse_theory(theories::theory_source(theories::TheoryKind::StrMonCat));
  EXPECT_EQ(t.signature.sort_count(), 2u);
  for (const char* op : {"dom", "cod", "id", "comp", "tensor_O", "tensor_A", "I_O", "I_A"}) {
    EXPECT_TRUE(t.signature.find_op(op).has_value()) << op;
  }
  EXPECT_EQ(t.signature.op_count(), 8u);
  // 8 category axioms, 9 monoidal ones
  EXPECT_EQ(t.axioms.size(), 17u);
}

TEST(Dsl, RoundTripsEveryBuiltin) {
  for (auto k : {theories::TheoryKind::Monoid, theories::TheoryKind::CMonoid,
                 theories::TheoryKind::Group, theories::TheoryKind::Category,
                 theories::TheoryKind::StrMonCat}) {
    const Theory t = parse_theory(theories::theory_source(k));
    EXPECT_EQ(parse_theory(print_theory(t)), t) << theories::to_string(k);
  }
}

TEST(Dsl, ReportsSortErrors) {
  const char* src = R"(theory bad
sort O;
sort A;
op dom : A -> O;
axiom forall x:O |- def(dom(x));
)";
  EXPECT_THROW(parse_theory(src), SortError);
}

TEST(Dsl, ReportsPosition) {
  const char* src = "theory t\nsort M;\nop e : -> M\nop f : M -> M;\n";
  try {
    parse_theory(src);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(Dsl, RejectsUndeclaredVariables) {
  const char* src = "theory t\nsort M;\nop f : M -> M;\naxiom forall x:M |- f(y) = x;\n";
  EXPECT_THROW(parse_theory(src), Error);
}

TEST(Dsl, ParseTermResolvesVariablesFirst) {
  Signature sig;
  const SortId m = sig.add_sort("M");
  const OpId mul = sig.add_op("mul", {m, m}, m);
  const OpId a = sig.add_op("a", {}, m);
  const Term t = parse_term("mul(a, a)", sig, {{"a", m}});
  const Term v = Term::variable("a", m);
  EXPECT_EQ(t, Term::apply(mul, {v, v}));
  EXPECT_EQ(parse_term("mul(a, a)", sig), Term::apply(mul, {Term::apply(a), Term::apply(a)}));
  EXPECT_EQ(print_term(sig, parse_term("mul(a, a)", sig)), "mul(a, a)");
}

TEST(Dsl, DefinednessIsReflexiveEquation) {
  const Theory t = parse_theory("theory t\nsort M;\nop f : M -> M;\naxiom forall x:M |- def(f(x));\n");
  ASSERT_EQ(t.axioms.size(), 1u);
  ASSERT_EQ(t.axioms[0].conclusion.conjuncts.size(), 1u);
  EXPECT_TRUE(is_definedness(t.axioms[0].conclusion.conjuncts[0]));
  EXPECT_TRUE(t.axioms[0].premise.is_top());
}
