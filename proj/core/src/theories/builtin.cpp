#include "isolab/theories/builtin.hpp"

#include <array>
#include <mutex>

#include "isolab/phl/dsl.hpp"

namespace isolab::theories {

namespace {

constexpr std::string_view kMonoid = R"(theory monoid

sort M;

op e : -> M;
op mul : M, M -> M;

axiom |- def(e);
axiom forall x:M, y:M |- def(mul(x, y));
axiom forall x:M, y:M, z:M |- mul(x, mul(y, z)) = mul(mul(x, y), z);
axiom forall x:M |- mul(x, e) = x;
axiom forall x:M |- mul(e, x) = x;
)";

constexpr std::string_view kCMonoid = R"(theory cmonoid

sort M;

op e : -> M;
op mul : M, M -> M;

axiom |- def(e);
axiom forall x:M, y:M |- def(mul(x, y));
axiom forall x:M, y:M, z:M |- mul(x, mul(y, z)) = mul(mul(x, y), z);
axiom forall x:M |- mul(x, e) = x;
axiom forall x:M |- mul(e, x) = x;
axiom forall x:M, y:M |- mul(x, y) = mul(y, x);
)";

constexpr std::string_view kGroup = R"(theory group

sort M;

op e : -> M;
op mul : M, M -> M;
op inv : M -> M;

axiom |- def(e);
axiom forall x:M, y:M |- def(mul(x, y));
axiom forall x:M, y:M, z:M |- mul(x, mul(y, z)) = mul(mul(x, y), z);
axiom forall x:M |- mul(x, e) = x;
axiom forall x:M |- mul(e, x) = x;
axiom forall x:M |- def(inv(x));
axiom forall x:M |- mul(x, inv(x)) = e;
axiom forall x:M |- mul(inv(x), x) = e;
)";

constexpr std::string_view kCategorySignature = R"(sort O;
sort A;

op dom : A -> O;
op cod : A -> O;
op id : O -> A;
op comp : A, A -> A;
)";

constexpr std::string_view kCategoryAxioms = R"(
# category
axiom forall f:A |- def(dom(f)), def(cod(f));
axiom forall x:O |- def(id(x));
axiom forall x:O |- dom(id(x)) = x, cod(id(x)) = x;
axiom forall g:A, f:A. dom(g) = cod(f) |- def(comp(g, f));
axiom forall g:A, f:A. def(comp(g, f)) |- dom(g) = cod(f);
axiom forall g:A, f:A. def(comp(g, f)) |- dom(comp(g, f)) = dom(f), cod(comp(g, f)) = cod(g);
axiom forall f:A |- comp(f, id(dom(f))) = f, comp(id(cod(f)), f) = f;
axiom forall h:A, g:A, f:A. def(comp(h, g)), def(comp(g, f)) |- comp(h, comp(g, f)) = comp(comp(h, g), f);
)";

constexpr std::string_view kMonoidalSignature = R"(op tensor_O : O, O -> O;
op tensor_A : A, A -> A;
op I_O : -> O;
op I_A : -> A;
)";

constexpr std::string_view kMonoidalAxioms = R"(
# strict monoidal structure
axiom forall x:O, y:O, f:A, g:A |- def(tensor_O(x, y)), def(tensor_A(f, g));
axiom |- def(I_O), def(I_A);
axiom forall x:O, y:O, z:O, f:A, g:A, h:A |- tensor_O(x, tensor_O(y, z)) = tensor_O(tensor_O(x, y), z), tensor_A(f, tensor_A(g, h)) = tensor_A(tensor_A(f, g), h);
axiom forall x:O, f:A |- tensor_O(x, I_O) = x, tensor_O(I_O, x) = x, tensor_A(f, I_A) = f, tensor_A(I_A, f) = f;
axiom forall f:A, g:A |- dom(tensor_A(f, g)) = tensor_O(dom(f), dom(g));
axiom forall f:A, g:A |- cod(tensor_A(f, g)) = tensor_O(cod(f), cod(g));
axiom forall f:A, g:A, h:A, k:A. def(comp(f, h)), def(comp(g, k)) |- comp(tensor_A(f, g), tensor_A(h, k)) = tensor_A(comp(f, h), comp(g, k));
axiom forall x:O, y:O |- id(tensor_O(x, y)) = tensor_A(id(x), id(y));
axiom |- id(I_O) = I_A;
)";

const std::string& category_source() {
  static const std::string s = "theory category\n\n" + std::string(kCategorySignature) +
                               std::string(kCategoryAxioms);
  return s;
}

const std::string& strmoncat_source() {
  static const std::string s =
      "theory strmoncat\n\n" + std::string(kCategorySignature) +
      std::string(kMonoidalSignature) + std::string(kCategoryAxioms) +
      std::string(kMonoidalAxioms);
  return s;
}

constexpr std::array<TheoryKind, 5> kKinds{TheoryKind::Monoid, TheoryKind::CMonoid,
                                           TheoryKind::Group, TheoryKind::Category,
                                           TheoryKind::StrMonCat};

}  // namespace

std::string_view to_string(TheoryKind k) {
  switch (k) {
    case TheoryKind::Monoid: return "monoid";
    case TheoryKind::CMonoid: return "cmonoid";
    case TheoryKind::Group: return "group";
    case TheoryKind::Category: return "category";
    case TheoryKind::StrMonCat: return "strmoncat";
  }
  return "?";
}

std::optional<TheoryKind> parse_theory_kind(std::string_view name) {
  for (TheoryKind k : kKinds) {
    if (to_string(k) == name) return k;
  }
  if (name == "smc") return TheoryKind::StrMonCat;
  return std::nullopt;
}

std::string_view theory_source(TheoryKind k) {
  switch (k) {
    case TheoryKind::Monoid: return kMonoid;
    case TheoryKind::CMonoid: return kCMonoid;
    case TheoryKind::Group: return kGroup;
    case TheoryKind::Category: return category_source();
    case TheoryKind::StrMonCat: return strmoncat_source();
  }
  return {};
}

std::shared_ptr<const phl::Theory> build_theory(TheoryKind k) {
  static std::mutex mu;
  static std::array<std::shared_ptr<const phl::Theory>, kKinds.size()> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[static_cast<std::size_t>(k)];
  if (!slot) {
    slot = std::make_shared<const phl::Theory>(phl::parse_theory(theory_source(k)));
  }
  return slot;
}

std::string presheaf_sort_name(const FiniteCategory& j, Elem object) {
  return "X_" + j.objects.at(static_cast<std::size_t>(object));
}

std::string presheaf_op_name(const FiniteCategory& j, Elem arrow) {
  return "alpha_" + j.arrows.at(static_cast<std::size_t>(arrow));
}

std::shared_ptr<const phl::Theory> build_presheaf_theory(const FiniteCategory& j) {
  j.validate();
  auto th = std::make_shared<phl::Theory>();
  th->name = "presheaf_" + (j.name.empty() ? std::string("J") : j.name);
  phl::Signature& sig = th->signature;
  std::vector<phl::SortId> sorts;
  for (std::size_t i = 0; i < j.object_count(); ++i) {
    sorts.push_back(sig.add_sort(presheaf_sort_name(j, static_cast<Elem>(i))));
  }
  std::vector<phl::OpId> ops;
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    ops.push_back(sig.add_op(presheaf_op_name(j, static_cast<Elem>(f)),
                             {sorts[static_cast<std::size_t>(j.dom[f])]},
                             sorts[static_cast<std::size_t>(j.cod[f])]));
  }
  auto var = [&](Elem object) {
    return phl::Term::variable("x", sorts[static_cast<std::size_t>(object)]);
  };
  auto ctx = [&](Elem object) {
    return phl::VarContext{{"x", sorts[static_cast<std::size_t>(object)]}};
  };
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    const Elem src = j.dom[f];
    th->axioms.push_back(
        {ctx(src), {}, {{phl::defined(phl::Term::apply(ops[f], {var(src)}))}}});
  }
  for (std::size_t i = 0; i < j.object_count(); ++i) {
    const Elem obj = static_cast<Elem>(i);
    const std::size_t idf = static_cast<std::size_t>(j.id[i]);
    th->axioms.push_back(
        {ctx(obj), {}, {{phl::Equation{phl::Term::apply(ops[idf], {var(obj)}), var(obj)}}}});
  }
  for (std::size_t g = 0; g < j.arrow_count(); ++g) {
    for (std::size_t f = 0; f < j.arrow_count(); ++f) {
      const Elem gf = j.compose(static_cast<Elem>(g), static_cast<Elem>(f));
      if (gf == kUndefined) continue;
      const Elem src = j.dom[f];
      phl::Term lhs = phl::Term::apply(ops[g], {phl::Term::apply(ops[f], {var(src)})});
      phl::Term rhs = phl::Term::apply(ops[static_cast<std::size_t>(gf)], {var(src)});
      th->axioms.push_back({ctx(src), {}, {{phl::Equation{lhs, rhs}}}});
    }
  }
  phl::validate_theory(*th);
  return th;
}

}  // namespace isolab::theories
