#pragma once

#include <string>
#include <string_view>

#include "isolab/phl/theory.hpp"

namespace isolab::phl {

/// Parses the theory DSL (grammar in docs/theory.ebnf). Throws ParseError
/// with line/column on malformed input and SortError on ill-sorted axioms.
Theory parse_theory(std::string_view source);

/// Parses a single term. Bare identifiers resolve first to variables of
/// `context`, then to constants of `sig`.
Term parse_term(std::string_view text, const Signature& sig,
                const VarContext& context = {});

std::string print_theory(const Theory& theory);
std::string print_term(const Signature& sig, const Term& t);
std::string print_formula(const Signature& sig, const HornFormula& f);
std::string print_sequent(const Signature& sig, const Sequent& s);

}  // namespace isolab::phl
