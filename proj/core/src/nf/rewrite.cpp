#include "isolab/nf/rewrite.hpp"

#include <algorithm>
#include <limits>

#include "isolab/error.hpp"
#include "isolab/phl/dsl.hpp"

namespace isolab::nf {

using phl::OpId;
using phl::SortId;
using phl::Term;

namespace {

constexpr std::size_t kUninhabited = std::numeric_limits<std::size_t>::max();

Term replace_arg(const Term& t, std::size_t i, Term arg) {
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i] = std::move(arg);
  return Term::apply(t.op(), std::move(args));
}

}  // namespace

std::string_view to_string(Strategy s) {
  return s == Strategy::LeftmostInnermost ? "leftmost-innermost" : "rightmost-outermost";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "leftmost-innermost" || name == "innermost") return Strategy::LeftmostInnermost;
  if (name == "rightmost-outermost" || name == "outermost") return Strategy::RightmostOutermost;
  return std::nullopt;
}

std::string_view to_string(EngineKind k) {
  switch (k) {
    case EngineKind::Monoid: return "monoid";
    case EngineKind::CMonoid: return "cmonoid";
    case EngineKind::Group: return "group";
    case EngineKind::SmcObject: return "smc-xo";
    case EngineKind::SmcArrow: return "smc-xa";
    case EngineKind::Presheaf: return "presheaf";
  }
  return "?";
}

std::optional<EngineKind> parse_engine_kind(std::string_view name) {
  for (EngineKind k : {EngineKind::Monoid, EngineKind::CMonoid, EngineKind::Group,
                       EngineKind::SmcObject, EngineKind::SmcArrow, EngineKind::Presheaf}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

TermEngine::TermEngine(EngineKind kind, const models::PartialStructure& model,
                       std::vector<SortId> indeterminate_sorts)
    : kind_(kind), diagram_(models::diagram_theory(model, indeterminate_sorts)) {
  const phl::Signature& sig = signature();
  const_of_op_.resize(sig.op_count());
  for (std::size_t s = 0; s < diagram_.constants.size(); ++s) {
    for (std::size_t e = 0; e < diagram_.constants[s].size(); ++e) {
      const_of_op_[phl::index(diagram_.constants[s][e])] = {{s, static_cast<Elem>(e)}};
    }
  }

  min_size_.assign(sig.sort_count(), kUninhabited);
  for (bool changed = true; changed;) {
    changed = false;
    for (const phl::OpSymbol& o : sig.ops()) {
      std::size_t size = 1;
      for (SortId a : o.arg_sorts) {
        if (min_size_[phl::index(a)] == kUninhabited) {
          size = kUninhabited;
          break;
        }
        size += min_size_[phl::index(a)];
      }
      std::size_t& best = min_size_[phl::index(o.result_sort)];
      if (size < best) {
        best = size;
        changed = true;
      }
    }
  }
}

void TermEngine::add_rule(std::string name,
                          std::function<std::optional<Term>(const Term&)> fn) {
  rules_.push_back({std::move(name), std::move(fn)});
}

OpId TermEngine::op(std::string_view name) const {
  auto o = signature().find_op(name);
  if (!o) throw InvariantViolation("engine signature lacks op '" + std::string(name) + "'");
  return *o;
}

Term TermEngine::constant(std::size_t sort, Elem e) const {
  return Term::apply(diagram_.constants.at(sort).at(static_cast<std::size_t>(e)));
}

std::optional<std::pair<std::size_t, Elem>> TermEngine::as_constant(const Term& t) const {
  if (t.is_variable() || !t.args().empty()) return std::nullopt;
  return const_of_op_[phl::index(t.op())];
}

Term TermEngine::chain(OpId mul, std::vector<Term> atoms, Term unit) {
  if (atoms.empty()) return unit;
  Term r = atoms.back();
  for (std::size_t i = atoms.size() - 1; i-- > 0;) r = Term::apply(mul, {atoms[i], r});
  return r;
}

void TermEngine::flatten(OpId mul, const Term& t, std::vector<Term>& out) {
  if (!t.is_variable() && t.op() == mul) {
    for (const Term& a : t.args()) flatten(mul, a, out);
  } else {
    out.push_back(t);
  }
}

void TermEngine::add_monoid_rules(std::string_view prefix, OpId mul, std::size_t sort, Elem unit,
                                  std::function<Elem(Elem, Elem)> fold) {
  const std::string p(prefix);
  add_rule(p + ".assoc", [this, mul](const Term& t) -> std::optional<Term> {
    if (!is_op(t, mul) || !is_op(t.args()[0], mul)) return std::nullopt;
    const Term& l = t.args()[0];
    return Term::apply(mul, {l.args()[0], Term::apply(mul, {l.args()[1], t.args()[1]})});
  });
  add_rule(p + ".fold", [this, mul, sort, fold](const Term& t) -> std::optional<Term> {
    if (!is_op(t, mul)) return std::nullopt;
    auto a = as_constant(t.args()[0]);
    auto b = as_constant(t.args()[1]);
    if (!a || !b) return std::nullopt;
    return constant(sort, fold(a->second, b->second));
  });
  add_rule(p + ".fold-assoc", [this, mul, sort, fold](const Term& t) -> std::optional<Term> {
    if (!is_op(t, mul) || !is_op(t.args()[1], mul)) return std::nullopt;
    auto a = as_constant(t.args()[0]);
    auto b = as_constant(t.args()[1].args()[0]);
    if (!a || !b) return std::nullopt;
    return Term::apply(mul, {constant(sort, fold(a->second, b->second)), t.args()[1].args()[1]});
  });
  add_rule(p + ".unit-left", [this, mul, unit](const Term& t) -> std::optional<Term> {
    if (!is_op(t, mul)) return std::nullopt;
    auto a = as_constant(t.args()[0]);
    if (!a || a->second != unit) return std::nullopt;
    return t.args()[1];
  });
  add_rule(p + ".unit-right", [this, mul, unit](const Term& t) -> std::optional<Term> {
    if (!is_op(t, mul)) return std::nullopt;
    auto b = as_constant(t.args()[1]);
    if (!b || b->second != unit) return std::nullopt;
    return t.args()[0];
  });
}

std::optional<Term> TermEngine::try_root(const Term& t, Strategy s, std::string& rule) const {
  if (t.is_variable()) return std::nullopt;
  const std::size_t n = rules_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Rule& r = rules_[s == Strategy::LeftmostInnermost ? k : n - 1 - k];
    if (auto out = r.apply(t)) {
      rule = r.name;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<Term> TermEngine::step(const Term& t, Strategy s, std::vector<std::size_t>& pos,
                                     std::string& rule) const {
  if (s == Strategy::RightmostOutermost) {
    if (auto r = try_root(t, s, rule)) return r;
  }
  if (!t.is_variable()) {
    const std::size_t n = t.args().size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = s == Strategy::LeftmostInnermost ? k : n - 1 - k;
      pos.push_back(i);
      if (auto r = step(t.args()[i], s, pos, rule)) return replace_arg(t, i, std::move(*r));
      pos.pop_back();
    }
  }
  if (s == Strategy::LeftmostInnermost) return try_root(t, s, rule);
  return std::nullopt;
}

Term TermEngine::normalize(const Term& t, Strategy strategy, std::vector<RewriteStep>* trace,
                           std::size_t step_limit) const {
  Term cur = t;
  for (std::size_t steps = 0;; ++steps) {
    std::vector<std::size_t> pos;
    std::string rule;
    auto next = step(cur, strategy, pos, rule);
    if (!next) return cur;
    if (steps == step_limit) {
      throw InvariantViolation("rewriting exceeded " + std::to_string(step_limit) +
                               " steps on " + print(t));
    }
    cur = std::move(*next);
    if (trace != nullptr) trace->push_back({std::move(rule), std::move(pos), cur});
  }
}

std::optional<NormalForm> TermEngine::reduce(const Term& t, Strategy strategy) const {
  return read_off(normalize(t, strategy));
}

Term TermEngine::parse(std::string_view text) const {
  return phl::parse_term(text, signature());
}

std::string TermEngine::print(const Term& t) const { return phl::print_term(signature(), t); }

std::optional<Term> TermEngine::random_hook(std::mt19937_64&, SortId, std::size_t) const {
  return std::nullopt;
}

Term TermEngine::random_term(std::mt19937_64& rng, std::size_t budget) const {
  std::vector<SortId> sorts;
  for (std::size_t s = 0; s < min_size_.size(); ++s) {
    if (min_size_[s] <= budget) sorts.push_back(SortId{static_cast<std::uint32_t>(s)});
  }
  if (sorts.empty()) throw Error("no closed term fits the size budget");
  std::uniform_int_distribution<std::size_t> pick(0, sorts.size() - 1);
  return random_of_sort(rng, sorts[pick(rng)], budget);
}

Term TermEngine::random_of_sort(std::mt19937_64& rng, SortId sort, std::size_t budget) const {
  if (auto t = random_hook(rng, sort, budget)) return *t;

  const phl::Signature& sig = signature();
  std::vector<OpId> atoms;
  std::vector<OpId> compound;
  for (std::size_t o = 0; o < sig.op_count(); ++o) {
    const OpId id{static_cast<std::uint32_t>(o)};
    const phl::OpSymbol& sym = sig.op(id);
    if (sym.result_sort != sort) continue;
    if (sym.arity() == 0) {
      atoms.push_back(id);
      continue;
    }
    std::size_t need = 1;
    for (SortId a : sym.arg_sorts) {
      need = min_size_[phl::index(a)] == kUninhabited ? kUninhabited : need + min_size_[phl::index(a)];
      if (need == kUninhabited) break;
    }
    if (need <= budget) compound.push_back(id);
  }

  std::bernoulli_distribution leaf(0.3);
  if (compound.empty() || (!atoms.empty() && (budget <= 1 || leaf(rng)))) {
    const OpId xo = indeterminate();
    const bool has_x = sig.op(xo).result_sort == sort;
    if (has_x && std::bernoulli_distribution(0.4)(rng)) return Term::apply(xo);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    return Term::apply(atoms[pick(rng)]);
  }

  std::uniform_int_distribution<std::size_t> pick(0, compound.size() - 1);
  const OpId chosen = compound[pick(rng)];
  const phl::OpSymbol& sym = sig.op(chosen);
  std::size_t spare = budget - 1;
  for (SortId a : sym.arg_sorts) spare -= min_size_[phl::index(a)];
  std::vector<Term> args;
  for (std::size_t i = 0; i < sym.arity(); ++i) {
    const std::size_t last = sym.arity() - 1;
    std::size_t share = spare;
    if (i < last) share = std::uniform_int_distribution<std::size_t>(0, spare)(rng);
    spare -= share;
    args.push_back(random_of_sort(rng, sym.arg_sorts[i], min_size_[phl::index(sym.arg_sorts[i])] + share));
  }
  return Term::apply(chosen, std::move(args));
}

}  // namespace isolab::nf
