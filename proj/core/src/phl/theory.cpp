#include "isolab/phl/theory.hpp"

#include <algorithm>
#include <set>

#include "isolab/error.hpp"

namespace isolab::phl {

namespace {

void check_formula(const Signature& sig, const HornFormula& f,
                   const VarContext& context) {
  for (const Equation& eq : f.conjuncts) {
    const SortId l = infer_sort(sig, eq.lhs, context);
    const SortId r = infer_sort(sig, eq.rhs, context);
    if (l != r) {
      throw SortError("equation sides have different sorts: '" +
                      sig.sort(l).name + "' vs '" + sig.sort(r).name + "'");
    }
  }
}

}  // namespace

void validate_sequent(const Signature& sig, const Sequent& s) {
  std::set<std::string> names;
  for (const TypedVar& v : s.context) {
    if (index(v.sort) >= sig.sort_count()) {
      throw SortError("context variable '" + v.name + "' has an unknown sort");
    }
    if (!names.insert(v.name).second) {
      throw SortError("context variable '" + v.name + "' declared twice");
    }
  }
  check_formula(sig, s.premise, s.context);
  check_formula(sig, s.conclusion, s.context);
}

void validate_theory(const Theory& theory) {
  for (const Sequent& s : theory.axioms) validate_sequent(theory.signature, s);
}

}  // namespace isolab::phl
