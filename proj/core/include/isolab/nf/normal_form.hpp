#pragma once

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "isolab/models/structure.hpp"

namespace isolab::nf {

using models::Elem;

/// m_0 x m_1 x ... x m_n in expanded normal form: parts has n + 1 entries
/// and every x is flanked by a (possibly unit) monoid element.
struct MonoidNF {
  std::vector<Elem> parts;

  std::size_t x_count() const noexcept { return parts.size() - 1; }
  friend auto operator<=>(const MonoidNF&, const MonoidNF&) = default;
};

/// m·x^k over a commutative monoid.
struct CMonoidNF {
  Elem coeff = 0;
  std::uint32_t exponent = 0;
  friend auto operator<=>(const CMonoidNF&, const CMonoidNF&) = default;
};

/// Free-product normal form m_0 g_1^{k_1} m_1 ... g_r^{k_r} m_r over a group
/// and free generators g ∈ {0, 1, ...}: every k_i ≠ 0, and an interior m_i is
/// the unit only between syllables on different generators. Generator 0 is
/// the indeterminate x; further generators appear only in probe contexts.
struct GroupNF {
  struct Syllable {
    std::uint8_t gen = 0;
    std::int32_t exponent = 0;
    Elem after = 0;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
  };
  Elem head = 0;
  std::vector<Syllable> syllables;

  friend auto operator<=>(const GroupNF&, const GroupNF&) = default;
};

enum class SmcSort : std::uint8_t { Object, Arrow };

/// Letters adjoined to a strict monoidal category by one indeterminate: x_O
/// contributes x_O and id(x_O); x_A contributes dom/cod(x_A), x_A and the
/// identities on dom/cod(x_A).
enum class SmcLetter : std::uint8_t { XO, IdXO, DomXA, CodXA, XA, IdDomXA, IdCodXA };

SmcSort letter_sort(SmcLetter l) noexcept;

/// c_1 ⊗ L_1 ⊗ c_2 ⊗ ... ⊗ L_{k-1} ⊗ c_k with constants c_i of C (objects or
/// arrows per `sort`) and letters L_i of that sort. A word without letters is
/// an element of C itself.
struct SmcWord {
  SmcSort sort = SmcSort::Object;
  std::vector<Elem> consts;
  std::vector<SmcLetter> letters;

  friend auto operator<=>(const SmcWord&, const SmcWord&) = default;
};

/// An element of sort X_j in M⟨x_i⟩: a constant a ∈ M_j, or f(x_i) for an
/// arrow f : i -> j of J.
struct PresheafNF {
  enum class Kind : std::uint8_t { Const, Gen };
  Kind kind = Kind::Const;
  Elem object = 0;  // j, the sort
  Elem value = 0;   // element of M_j, or the arrow f

  friend auto operator<=>(const PresheafNF&, const PresheafNF&) = default;
};

using NormalForm = std::variant<MonoidNF, CMonoidNF, GroupNF, SmcWord, PresheafNF>;

}  // namespace isolab::nf
