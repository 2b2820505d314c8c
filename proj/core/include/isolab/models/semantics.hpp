#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isolab/models/structure.hpp"

namespace isolab::models {

/// Values for the variables of a context, by position.
using Env = std::vector<Elem>;

/// A term compiled against a fixed context into a postfix program.
class CompiledTerm {
 public:
  CompiledTerm(const phl::Term& t, const phl::VarContext& context);

  /// Kleene-strict evaluation: kUndefined as soon as any subterm is.
  Elem eval(const PartialStructure& m, const Env& env) const;

 private:
  struct Step {
    bool is_var;
    std::uint32_t id;  // variable slot or op index
    std::uint32_t arity;
  };
  std::vector<Step> program_;
};

Elem eval_term(const PartialStructure& m, const phl::Term& t,
               const phl::VarContext& context, const Env& env);

/// Evaluation with an environment keyed by variable.
Elem eval_term(const PartialStructure& m, const phl::Term& t,
               const std::map<phl::TypedVar, Elem>& env);

/// First environment (in odometer order over the context) satisfying the
/// premise but not the conclusion.
std::optional<Env> find_counterexample(const PartialStructure& m,
                                       const phl::Sequent& s);

bool holds(const PartialStructure& m, const phl::Sequent& s);

struct AxiomFailure {
  std::size_t axiom;
  std::string axiom_text;
  std::vector<std::pair<std::string, std::string>> witness;  // var, element
};

struct ModelReport {
  std::vector<AxiomFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Checks every axiom of the structure's theory.
ModelReport check_model(const PartialStructure& m);

std::string format_report(const ModelReport& report);

}  // namespace isolab::models
