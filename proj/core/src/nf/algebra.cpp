#include "isolab/nf/algebra.hpp"

#include <sstream>

#include "isolab/error.hpp"
#include "isolab/theories/builtin.hpp"

namespace isolab::nf {

namespace {

std::size_t at(Elem e) { return static_cast<std::size_t>(e); }

}  // namespace

SmcSort letter_sort(SmcLetter l) noexcept {
  switch (l) {
    case SmcLetter::XO:
    case SmcLetter::DomXA:
    case SmcLetter::CodXA:
      return SmcSort::Object;
    default:
      return SmcSort::Arrow;
  }
}

// ---- monoid ------------------------------------------------------------------

MonoidAlgebra::MonoidAlgebra(theories::FiniteMonoid m) : m_(std::move(m)) { m_.validate(); }

MonoidNF MonoidAlgebra::normalize(const std::vector<WordToken>& word) const {
  MonoidNF r{{m_.unit}};
  for (const WordToken& t : word) {
    if (!t.is_gen) {
      r.parts.back() = m_.mul(r.parts.back(), t.elem);
      continue;
    }
    if (t.gen != 0 || t.exponent < 0) {
      throw Error("monoid words admit only non-negative powers of x");
    }
    for (std::int32_t k = 0; k < t.exponent; ++k) r.parts.push_back(m_.unit);
  }
  return r;
}

MonoidNF MonoidAlgebra::mul(const MonoidNF& u, const MonoidNF& v) const {
  MonoidNF r = u;
  r.parts.back() = m_.mul(r.parts.back(), v.parts.front());
  r.parts.insert(r.parts.end(), v.parts.begin() + 1, v.parts.end());
  return r;
}

MonoidNF MonoidAlgebra::subst(const MonoidNF& s, const MonoidNF& v) const {
  MonoidNF r{{s.parts.front()}};
  for (std::size_t i = 1; i < s.parts.size(); ++i) {
    r = mul(r, v);
    r.parts.back() = m_.mul(r.parts.back(), s.parts[i]);
  }
  return r;
}

std::string MonoidAlgebra::format(const MonoidNF& u) const {
  std::string out;
  for (std::size_t i = 0; i < u.parts.size(); ++i) {
    if (i > 0) out += " x ";
    out += m_.elements[at(u.parts[i])];
  }
  return out;
}

// ---- commutative monoid ----------------------------------------------------------

CMonoidAlgebra::CMonoidAlgebra(theories::FiniteMonoid m) : m_(std::move(m)) {
  m_.validate();
  if (!m_.commutative()) throw InvariantViolation("monoid '" + m_.name + "' is not commutative");
}

CMonoidNF CMonoidAlgebra::normalize(const std::vector<WordToken>& word) const {
  CMonoidNF r = unit();
  for (const WordToken& t : word) {
    if (!t.is_gen) {
      r.coeff = m_.mul(r.coeff, t.elem);
    } else if (t.gen != 0 || t.exponent < 0) {
      throw Error("commutative monoid words admit only non-negative powers of x");
    } else {
      r.exponent += static_cast<std::uint32_t>(t.exponent);
    }
  }
  return r;
}

CMonoidNF CMonoidAlgebra::mul(const CMonoidNF& u, const CMonoidNF& v) const {
  return {m_.mul(u.coeff, v.coeff), u.exponent + v.exponent};
}

CMonoidNF CMonoidAlgebra::subst(const CMonoidNF& s, const CMonoidNF& v) const {
  CMonoidNF r = constant(s.coeff);
  for (std::uint32_t k = 0; k < s.exponent; ++k) r = mul(r, v);
  return r;
}

std::string CMonoidAlgebra::format(const CMonoidNF& u) const {
  std::string out = m_.elements[at(u.coeff)];
  if (u.exponent == 1) out += " x";
  if (u.exponent > 1) out += " x^" + std::to_string(u.exponent);
  return out;
}

// ---- group -------------------------------------------------------------------------

GroupAlgebra::GroupAlgebra(theories::FiniteGroup g) : g_(std::move(g)) { g_.validate(); }

GroupNF GroupAlgebra::normalize(const std::vector<WordToken>& word) const {
  GroupNF r = unit();
  const Elem e = g_.unit();
  for (const WordToken& t : word) {
    if (!t.is_gen) {
      Elem& slot = r.syllables.empty() ? r.head : r.syllables.back().after;
      slot = g_.mul(slot, t.elem);
      continue;
    }
    if (t.exponent == 0) continue;
    if (!r.syllables.empty() && r.syllables.back().gen == t.gen &&
        r.syllables.back().after == e) {
      r.syllables.back().exponent += t.exponent;
      if (r.syllables.back().exponent == 0) r.syllables.pop_back();
      continue;
    }
    r.syllables.push_back({t.gen, t.exponent, e});
  }
  return r;
}

std::vector<WordToken> GroupAlgebra::tokens(const GroupNF& u) const {
  std::vector<WordToken> out{{false, u.head, 0, 0}};
  for (const auto& s : u.syllables) {
    out.push_back({true, 0, s.gen, s.exponent});
    out.push_back({false, s.after, 0, 0});
  }
  return out;
}

GroupNF GroupAlgebra::mul(const GroupNF& u, const GroupNF& v) const {
  std::vector<WordToken> w = tokens(u);
  std::vector<WordToken> tail = tokens(v);
  w.insert(w.end(), tail.begin(), tail.end());
  return normalize(w);
}

GroupNF GroupAlgebra::inv(const GroupNF& u) const {
  std::vector<WordToken> w = tokens(u);
  std::vector<WordToken> r(w.rbegin(), w.rend());
  for (WordToken& t : r) {
    if (t.is_gen) {
      t.exponent = -t.exponent;
    } else {
      t.elem = g_.inv[at(t.elem)];
    }
  }
  return normalize(r);
}

GroupNF GroupAlgebra::subst(const GroupNF& s, const GroupNF& v) const {
  const GroupNF vinv = inv(v);
  GroupNF r = constant(s.head);
  for (const auto& syl : s.syllables) {
    const GroupNF& step = syl.exponent > 0 ? v : vinv;
    const std::int32_t n = syl.exponent > 0 ? syl.exponent : -syl.exponent;
    for (std::int32_t k = 0; k < n; ++k) {
      r = syl.gen == 0 ? mul(r, step) : mul(r, normalize({{true, 0, syl.gen, syl.exponent > 0 ? 1 : -1}}));
    }
    r = mul(r, constant(syl.after));
  }
  return r;
}

std::int32_t GroupAlgebra::degree(const GroupNF& u) const {
  std::int32_t d = 0;
  for (const auto& s : u.syllables) {
    if (s.gen == 0) d += s.exponent;
  }
  return d;
}

std::string GroupAlgebra::format(const GroupNF& u) const {
  std::ostringstream os;
  os << g_.monoid.elements[at(u.head)];
  for (const auto& s : u.syllables) {
    os << ' ' << (s.gen == 0 ? std::string("x") : "y" + std::to_string(s.gen - 1));
    if (s.exponent != 1) os << '^' << s.exponent;
    os << ' ' << g_.monoid.elements[at(s.after)];
  }
  return os.str();
}

// ---- strict monoidal categories ----------------------------------------------------

SmcAlgebra::SmcAlgebra(theories::FiniteStrictMonCat c) : c_(std::move(c)) { c_.validate(); }

SmcWord SmcAlgebra::unit(SmcSort s) const {
  return {s, {s == SmcSort::Object ? c_.unit_ob : c_.unit_arr}, {}};
}

SmcWord SmcAlgebra::letter(SmcLetter l) const {
  const SmcSort s = letter_sort(l);
  const Elem i = s == SmcSort::Object ? c_.unit_ob : c_.unit_arr;
  return {s, {i, i}, {l}};
}

namespace {

SmcLetter dom_letter(SmcLetter l) {
  switch (l) {
    case SmcLetter::IdXO: return SmcLetter::XO;
    case SmcLetter::XA:
    case SmcLetter::IdDomXA: return SmcLetter::DomXA;
    case SmcLetter::IdCodXA: return SmcLetter::CodXA;
    default: throw SortError("dom applied to an object letter");
  }
}

SmcLetter cod_letter(SmcLetter l) {
  switch (l) {
    case SmcLetter::IdXO: return SmcLetter::XO;
    case SmcLetter::XA:
    case SmcLetter::IdCodXA: return SmcLetter::CodXA;
    case SmcLetter::IdDomXA: return SmcLetter::DomXA;
    default: throw SortError("cod applied to an object letter");
  }
}

SmcLetter id_letter(SmcLetter l) {
  switch (l) {
    case SmcLetter::XO: return SmcLetter::IdXO;
    case SmcLetter::DomXA: return SmcLetter::IdDomXA;
    case SmcLetter::CodXA: return SmcLetter::IdCodXA;
    default: throw SortError("id applied to an arrow letter");
  }
}

// g ∘ f on letters, given that cod(f) = dom(g).
std::optional<SmcLetter> comp_letter(SmcLetter g, SmcLetter f) {
  using L = SmcLetter;
  if (g == L::IdXO && f == L::IdXO) return L::IdXO;
  if (g == L::XA && f == L::IdDomXA) return L::XA;
  if (g == L::IdCodXA && f == L::XA) return L::XA;
  if (g == L::IdDomXA && f == L::IdDomXA) return L::IdDomXA;
  if (g == L::IdCodXA && f == L::IdCodXA) return L::IdCodXA;
  return std::nullopt;
}

void require(const SmcWord& w, SmcSort s, const char* op) {
  if (w.sort != s) {
    throw SortError(std::string(op) + " applied to a word of the wrong sort");
  }
}

}  // namespace

SmcWord SmcAlgebra::dom(const SmcWord& f) const {
  require(f, SmcSort::Arrow, "dom");
  SmcWord r{SmcSort::Object, {}, {}};
  for (Elem a : f.consts) r.consts.push_back(c_.cat.dom[at(a)]);
  for (SmcLetter l : f.letters) r.letters.push_back(dom_letter(l));
  return r;
}

SmcWord SmcAlgebra::cod(const SmcWord& f) const {
  require(f, SmcSort::Arrow, "cod");
  SmcWord r{SmcSort::Object, {}, {}};
  for (Elem a : f.consts) r.consts.push_back(c_.cat.cod[at(a)]);
  for (SmcLetter l : f.letters) r.letters.push_back(cod_letter(l));
  return r;
}

SmcWord SmcAlgebra::id(const SmcWord& a) const {
  require(a, SmcSort::Object, "id");
  SmcWord r{SmcSort::Arrow, {}, {}};
  for (Elem o : a.consts) r.consts.push_back(c_.cat.id[at(o)]);
  for (SmcLetter l : a.letters) r.letters.push_back(id_letter(l));
  return r;
}

std::optional<SmcWord> SmcAlgebra::comp(const SmcWord& g, const SmcWord& f) const {
  require(g, SmcSort::Arrow, "comp");
  require(f, SmcSort::Arrow, "comp");
  if (cod(f) != dom(g)) return std::nullopt;
  SmcWord r{SmcSort::Arrow, {}, {}};
  for (std::size_t i = 0; i < f.consts.size(); ++i) {
    r.consts.push_back(c_.cat.compose(g.consts[i], f.consts[i]));
  }
  for (std::size_t i = 0; i < f.letters.size(); ++i) {
    auto l = comp_letter(g.letters[i], f.letters[i]);
    if (!l) throw InvariantViolation("letter composition table is incomplete");
    r.letters.push_back(*l);
  }
  return r;
}

SmcWord SmcAlgebra::tensor(const SmcWord& u, const SmcWord& v) const {
  if (u.sort != v.sort) throw SortError("tensor of words of different sorts");
  SmcWord r = u;
  Elem& seam = r.consts.back();
  seam = u.sort == SmcSort::Object ? c_.tensor_o(seam, v.consts.front())
                                   : c_.tensor_a(seam, v.consts.front());
  r.consts.insert(r.consts.end(), v.consts.begin() + 1, v.consts.end());
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

SmcWord SmcAlgebra::image(SmcLetter l, const SmcWord& v) const {
  switch (l) {
    case SmcLetter::XO:
      require(v, SmcSort::Object, "substitution for x_O");
      return v;
    case SmcLetter::IdXO:
      return id(v);
    case SmcLetter::XA:
      require(v, SmcSort::Arrow, "substitution for x_A");
      return v;
    case SmcLetter::DomXA: return dom(v);
    case SmcLetter::CodXA: return cod(v);
    case SmcLetter::IdDomXA: return id(dom(v));
    case SmcLetter::IdCodXA: return id(cod(v));
  }
  throw InvariantViolation("unknown letter");
}

SmcWord SmcAlgebra::subst(const SmcWord& s, const SmcWord& v) const {
  SmcWord r{s.sort, {s.consts.front()}, {}};
  for (std::size_t i = 0; i < s.letters.size(); ++i) {
    r = tensor(r, image(s.letters[i], v));
    r = tensor(r, SmcWord{s.sort, {s.consts[i + 1]}, {}});
  }
  return r;
}

std::string SmcAlgebra::letter_name(SmcLetter l) {
  switch (l) {
    case SmcLetter::XO: return "x_O";
    case SmcLetter::IdXO: return "id(x_O)";
    case SmcLetter::DomXA: return "dom(x_A)";
    case SmcLetter::CodXA: return "cod(x_A)";
    case SmcLetter::XA: return "x_A";
    case SmcLetter::IdDomXA: return "id(dom(x_A))";
    case SmcLetter::IdCodXA: return "id(cod(x_A))";
  }
  return "?";
}

std::string SmcAlgebra::format(const SmcWord& w) const {
  const auto& names = w.sort == SmcSort::Object ? c_.cat.objects : c_.cat.arrows;
  std::string out = names[at(w.consts.front())];
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out += " ⊗ " + letter_name(w.letters[i]) + " ⊗ " + names[at(w.consts[i + 1])];
  }
  return out;
}

// ---- presheaves --------------------------------------------------------------------

PresheafAlgebra::PresheafAlgebra(theories::PresheafData p) : p_(std::move(p)) { p_.validate(); }

PresheafNF PresheafAlgebra::generic(Elem object) const {
  return {PresheafNF::Kind::Gen, object, category().id[at(object)]};
}

PresheafNF PresheafAlgebra::alpha(Elem f, const PresheafNF& v) const {
  const theories::FiniteCategory& j = category();
  if (v.object != j.dom[at(f)]) throw SortError(theories::presheaf_op_name(j, f) + " applied at the wrong sort");
  if (v.kind == PresheafNF::Kind::Const) {
    return {PresheafNF::Kind::Const, j.cod[at(f)], p_.maps[at(f)][at(v.value)]};
  }
  return {PresheafNF::Kind::Gen, j.cod[at(f)], j.compose(f, v.value)};
}

PresheafNF PresheafAlgebra::subst(const PresheafNF& s, const PresheafNF& v) const {
  if (s.kind == PresheafNF::Kind::Const) return s;
  return alpha(s.value, v);
}

std::string PresheafAlgebra::format(const PresheafNF& u) const {
  const theories::FiniteCategory& j = category();
  if (u.kind == PresheafNF::Kind::Const) return p_.sets[at(u.object)][at(u.value)];
  const Elem i = j.dom[at(u.value)];
  const std::string x = j.object_count() == 1 ? "x" : "x_" + theories::presheaf_sort_name(j, i);
  if (j.is_identity(u.value)) return x;
  return theories::presheaf_op_name(j, u.value) + "(" + x + ")";
}

}  // namespace isolab::nf
