#pragma once

#include <string>
#include <vector>

#include "isolab/phl/signature.hpp"
#include "isolab/phl/term.hpp"

namespace isolab::phl {

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Finite conjunction of equations; the empty conjunction is "true".
/// Definedness t↓ is the reflexive equation t = t.
struct HornFormula {
  std::vector<Equation> conjuncts;

  static HornFormula top() { return {}; }
  bool is_top() const noexcept { return conjuncts.empty(); }
  friend bool operator==(const HornFormula&, const HornFormula&) = default;
};

inline Equation defined(Term t) { return Equation{t, t}; }
inline bool is_definedness(const Equation& e) { return e.lhs == e.rhs; }

/// premise ⊢^context conclusion
struct Sequent {
  VarContext context;
  HornFormula premise;
  HornFormula conclusion;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// A quasi-equational theory: signature plus Horn-sequent axioms.
struct Theory {
  std::string name;
  Signature signature;
  std::vector<Sequent> axioms;

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Checks that every axiom is well-sorted and that every free variable of
/// premise and conclusion is declared in the axiom's context.
void validate_sequent(const Signature& sig, const Sequent& s);
void validate_theory(const Theory& theory);

}  // namespace isolab::phl
