#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isolab/nf/normal_form.hpp"
#include "isolab/theories/data.hpp"

namespace isolab::nf {

// Structure operations computed directly on normal forms. Substitution
// subst(s, v) replaces the indeterminate of s by v, where v may live in any
// context with at most one further indeterminate.

/// One token of a word over M ∪ {x}: a monoid element or an occurrence of
/// free generator `gen` raised to `exponent`.
struct WordToken {
  bool is_gen = false;
  Elem elem = 0;
  std::uint8_t gen = 0;
  std::int32_t exponent = 1;
};

class MonoidAlgebra {
 public:
  explicit MonoidAlgebra(theories::FiniteMonoid m);

  const theories::FiniteMonoid& monoid() const noexcept { return m_; }
  MonoidNF unit() const { return {{m_.unit}}; }
  MonoidNF constant(Elem a) const { return {{a}}; }
  MonoidNF generic() const { return {{m_.unit, m_.unit}}; }

  /// Multiplies adjacent elements and inserts units.
  MonoidNF normalize(const std::vector<WordToken>& word) const;
  MonoidNF mul(const MonoidNF& u, const MonoidNF& v) const;
  MonoidNF subst(const MonoidNF& s, const MonoidNF& v) const;
  std::string format(const MonoidNF& u) const;

 private:
  theories::FiniteMonoid m_;
};

class CMonoidAlgebra {
 public:
  explicit CMonoidAlgebra(theories::FiniteMonoid m);

  const theories::FiniteMonoid& monoid() const noexcept { return m_; }
  CMonoidNF unit() const { return {m_.unit, 0}; }
  CMonoidNF constant(Elem a) const { return {a, 0}; }
  CMonoidNF generic() const { return {m_.unit, 1}; }

  CMonoidNF normalize(const std::vector<WordToken>& word) const;
  CMonoidNF mul(const CMonoidNF& u, const CMonoidNF& v) const;
  CMonoidNF subst(const CMonoidNF& s, const CMonoidNF& v) const;
  std::string format(const CMonoidNF& u) const;

 private:
  theories::FiniteMonoid m_;
};

class GroupAlgebra {
 public:
  explicit GroupAlgebra(theories::FiniteGroup g);

  const theories::FiniteGroup& group() const noexcept { return g_; }
  GroupNF unit() const { return {g_.unit(), {}}; }
  GroupNF constant(Elem a) const { return {a, {}}; }
  GroupNF generator(std::uint8_t gen) const { return {g_.unit(), {{gen, 1, g_.unit()}}}; }
  GroupNF generic() const { return generator(0); }

  /// Free-product reduction: merge adjacent elements, merge powers of the
  /// same generator across a unit, cancel zero exponents; repeated until
  /// no rule applies.
  GroupNF normalize(const std::vector<WordToken>& word) const;
  std::vector<WordToken> tokens(const GroupNF& u) const;
  GroupNF mul(const GroupNF& u, const GroupNF& v) const;
  GroupNF inv(const GroupNF& u) const;
  /// Replaces generator 0 of s by v.
  GroupNF subst(const GroupNF& s, const GroupNF& v) const;
  /// Exponent sum of generator 0.
  std::int32_t degree(const GroupNF& u) const;
  std::string format(const GroupNF& u) const;

 private:
  theories::FiniteGroup g_;
};

class SmcAlgebra {
 public:
  explicit SmcAlgebra(theories::FiniteStrictMonCat c);

  const theories::FiniteStrictMonCat& category() const noexcept { return c_; }

  SmcWord object(Elem a) const { return {SmcSort::Object, {a}, {}}; }
  SmcWord arrow(Elem f) const { return {SmcSort::Arrow, {f}, {}}; }
  SmcWord unit(SmcSort s) const;
  /// The one-letter word I ⊗ L ⊗ I.
  SmcWord letter(SmcLetter l) const;

  SmcWord dom(const SmcWord& f) const;
  SmcWord cod(const SmcWord& f) const;
  SmcWord id(const SmcWord& a) const;
  /// g ∘ f, defined iff cod(f) = dom(g); letterwise composition.
  std::optional<SmcWord> comp(const SmcWord& g, const SmcWord& f) const;
  SmcWord tensor(const SmcWord& u, const SmcWord& v) const;

  /// s with its letters interpreted at v: x_O ↦ v, id(x_O) ↦ id(v), x_A ↦ v,
  /// dom(x_A) ↦ dom(v), id(dom(x_A)) ↦ id(dom(v)), and so on.
  SmcWord subst(const SmcWord& s, const SmcWord& v) const;

  std::string format(const SmcWord& w) const;
  static std::string letter_name(SmcLetter l);

 private:
  SmcWord image(SmcLetter l, const SmcWord& v) const;

  theories::FiniteStrictMonCat c_;
};

class PresheafAlgebra {
 public:
  explicit PresheafAlgebra(theories::PresheafData p);

  const theories::PresheafData& data() const noexcept { return p_; }
  const theories::FiniteCategory& category() const noexcept { return p_.category; }

  PresheafNF constant(Elem object, Elem a) const { return {PresheafNF::Kind::Const, object, a}; }
  /// x_i, i.e. Gen(id_i).
  PresheafNF generic(Elem object) const;
  /// α_f(v); requires v of sort dom(f).
  PresheafNF alpha(Elem f, const PresheafNF& v) const;
  PresheafNF subst(const PresheafNF& s, const PresheafNF& v) const;
  std::string format(const PresheafNF& u) const;

 private:
  theories::PresheafData p_;
};

}  // namespace isolab::nf
