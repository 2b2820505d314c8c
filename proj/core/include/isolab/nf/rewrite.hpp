#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/models/diagram.hpp"
#include "isolab/nf/normal_form.hpp"
#include "isolab/theories/json_io.hpp"

namespace isolab::nf {

// Term rewriting over the diagram theory T(M, x). Each engine owns a table of
// named rules; a rule inspects a subterm at its root and either rewrites it
// or declines. Undefined terms (a composite of non-composable arrows) are
// left stuck: no rule fires on them and read_off reports them as undefined.

enum class Strategy {
  LeftmostInnermost,   // post-order, children left to right, rules in table order
  RightmostOutermost,  // pre-order, children right to left, rules in reverse order
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct RewriteStep {
  std::string rule;
  std::vector<std::size_t> position;  // argument indices from the root
  phl::Term result;                   // whole term after the step
};

struct Rule {
  std::string name;
  std::function<std::optional<phl::Term>(const phl::Term&)> apply;
};

enum class EngineKind { Monoid, CMonoid, Group, SmcObject, SmcArrow, Presheaf };

std::string_view to_string(EngineKind k);
std::optional<EngineKind> parse_engine_kind(std::string_view name);

class TermEngine {
 public:
  virtual ~TermEngine() = default;

  EngineKind kind() const noexcept { return kind_; }
  const models::Diagram& diagram() const noexcept { return diagram_; }
  const phl::Signature& signature() const noexcept { return diagram_.theory.signature; }
  std::span<const Rule> rules() const noexcept { return rules_; }
  phl::OpId indeterminate() const { return diagram_.indeterminates.front(); }

  /// Rewrites to a normal form. Throws InvariantViolation past `step_limit`.
  phl::Term normalize(const phl::Term& t, Strategy strategy = Strategy::LeftmostInnermost,
                      std::vector<RewriteStep>* trace = nullptr,
                      std::size_t step_limit = 100000) const;

  /// Reads a normal term as a typed normal form; nullopt when the term is
  /// stuck, i.e. denotes nothing.
  virtual std::optional<NormalForm> read_off(const phl::Term& normal) const = 0;
  /// Direct structural evaluation with the typed operations, bypassing the
  /// rules; an independent route to the same answer.
  virtual std::optional<NormalForm> evaluate(const phl::Term& t) const = 0;
  /// The canonical normal term of a typed normal form.
  virtual phl::Term to_term(const NormalForm& nf) const = 0;
  virtual std::string format(const NormalForm& nf) const = 0;

  /// normalize then read_off.
  std::optional<NormalForm> reduce(const phl::Term& t,
                                   Strategy strategy = Strategy::LeftmostInnermost) const;

  /// DSL term syntax over the diagram signature; word engines also accept
  /// whitespace-separated words such as "x 1 x^2 e".
  virtual phl::Term parse(std::string_view text) const;
  std::string print(const phl::Term& t) const;

  /// Random well-sorted closed term with at most `budget` nodes.
  phl::Term random_term(std::mt19937_64& rng, std::size_t budget) const;

 protected:
  TermEngine(EngineKind kind, const models::PartialStructure& model,
             std::vector<phl::SortId> indeterminate_sorts);

  void add_rule(std::string name, std::function<std::optional<phl::Term>(const phl::Term&)> fn);

  phl::OpId op(std::string_view name) const;
  phl::Term constant(std::size_t sort, Elem e) const;
  phl::Term x() const { return phl::Term::apply(indeterminate()); }
  /// (sort, element) when `t` is an element constant.
  std::optional<std::pair<std::size_t, Elem>> as_constant(const phl::Term& t) const;
  bool is_op(const phl::Term& t, phl::OpId o) const {
    return !t.is_variable() && t.op() == o;
  }
  /// Right-nested product of `atoms` under binary `mul`; `unit` when empty.
  static phl::Term chain(phl::OpId mul, std::vector<phl::Term> atoms, phl::Term unit);
  /// Leaves of a tree of `mul` nodes, left to right.
  static void flatten(phl::OpId mul, const phl::Term& t, std::vector<phl::Term>& out);

  /// Unit, associativity and constant folding for a binary monoid op whose
  /// constant table is `fold`.
  void add_monoid_rules(std::string_view prefix, phl::OpId mul, std::size_t sort, Elem unit,
                        std::function<Elem(Elem, Elem)> fold);

  /// Lets an engine shape part of the random distribution; returns nullopt
  /// to fall through to the generic generator.
  virtual std::optional<phl::Term> random_hook(std::mt19937_64& rng, phl::SortId sort,
                                               std::size_t budget) const;
  phl::Term random_of_sort(std::mt19937_64& rng, phl::SortId sort, std::size_t budget) const;

 private:
  std::optional<phl::Term> step(const phl::Term& t, Strategy s, std::vector<std::size_t>& pos,
                                std::string& rule) const;
  std::optional<phl::Term> try_root(const phl::Term& t, Strategy s, std::string& rule) const;

  EngineKind kind_;
  models::Diagram diagram_;
  std::vector<Rule> rules_;
  std::vector<std::optional<std::pair<std::size_t, Elem>>> const_of_op_;
  std::vector<std::size_t> min_size_;  // per sort; 0 when uninhabited
};

/// Builds the engine for `kind` over the data. The presheaf engine takes
/// the object whose sort receives the indeterminate (default: the first).
std::unique_ptr<TermEngine> make_engine(EngineKind kind, const theories::TaggedData& data,
                                        std::optional<std::string> indeterminate_object = {});

}  // namespace isolab::nf
