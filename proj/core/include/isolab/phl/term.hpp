#pragma once

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "isolab/phl/signature.hpp"

namespace isolab::phl {

/// A variable together with its declared sort.
struct TypedVar {
  std::string name;
  SortId sort{};

  friend auto operator<=>(const TypedVar&, const TypedVar&) = default;
};

using VarContext = std::vector<TypedVar>;

/// Immutable first-order term: a sorted variable or an operation applied to
/// argument terms. Copies share structure.
class Term {
 public:
  static Term variable(std::string name, SortId sort);
  static Term apply(OpId op, std::vector<Term> args = {});

  bool is_variable() const noexcept;
  const TypedVar& var() const;  // requires is_variable()
  OpId op() const;              // requires !is_variable()
  std::span<const Term> args() const;

  /// Number of nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Variable -> replacement, keyed by the typed variable being replaced.
using Bindings = std::map<TypedVar, Term>;

/// The unique sort of `t`. Every variable must occur in `context` with the
/// sort it is annotated with; every application must match its operation's
/// arity and argument sorts. Throws SortError otherwise.
SortId infer_sort(const Signature& sig, const Term& t, const VarContext& context);

/// Like infer_sort but trusts the sort annotation carried by each variable.
SortId sort_of(const Signature& sig, const Term& t);

/// Simultaneous, capture-free substitution. Each binding's term must have the
/// sort of the variable it replaces (SortError otherwise).
Term substitute(const Signature& sig, const Term& t, const Bindings& bindings);

/// Free variables in order of first occurrence.
std::vector<TypedVar> free_variables(const Term& t);

}  // namespace isolab::phl
