#pragma once

#include <cstdint>
#include <string>

#include "isolab/nf/rewrite.hpp"
#include "isolab/theories/data.hpp"

namespace isolab::suite {

// Property checks shared by the test suites and `isolab suite run`. Each
// returns how many instances were checked and the first failure, if any.

struct PropertyResult {
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
  void fail(std::string what);
};

/// Random closed terms normalized leftmost-innermost and rightmost-outermost
/// must agree, match direct evaluation, and be the canonical term of their
/// normal form.
PropertyResult dual_strategy(const nf::TermEngine& engine, std::uint64_t seed,
                             std::size_t count, std::size_t max_size = 12);

/// Unit and associativity laws of substitution on MonoidNF, exhaustively
/// over words with at most `max_x` occurrences of x; also checks that mul
/// agrees with normalizing the concatenated word.
PropertyResult monoid_subst_laws(const theories::FiniteMonoid& m, std::size_t max_x);

/// The strict monoidal category axioms on SmcWord values in both one-letter
/// contexts, over all argument tuples whose letters total at most
/// `max_letters`.
PropertyResult smc_axioms(const theories::FiniteStrictMonCat& c, std::size_t max_letters);

/// f_1 x ... x f_n ↦ f_1 x ... x f_n from arrow words of C⟨x_O⟩ to Arr(C)⟨x⟩
/// is a bijection that turns ⊗ into the product, on words with at most
/// `max_length` tokens; products are computed by both rewriting engines.
PropertyResult arr_preservation(const theories::FiniteStrictMonCat& c, std::size_t max_length);

/// Equality of presheaf normal forms agrees with separation by
/// interpretations into M + J(i, -), for every indeterminate object i.
PropertyResult presheaf_separation(const theories::PresheafData& p);

/// Random small partial structures and bijective homomorphisms out of them:
/// check_homomorphism says iso exactly when an explicit two-sided inverse
/// homomorphism exists (found by exhaustive search).
PropertyResult iso_reflection(std::uint64_t seed, std::size_t count);

}  // namespace isolab::suite
