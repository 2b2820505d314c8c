#include "isolab/models/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "isolab/error.hpp"
#include "isolab/phl/dsl.hpp"

namespace isolab::models {

CompiledTerm::CompiledTerm(const phl::Term& t, const phl::VarContext& context) {
  // Post-order emission: children left to right, then the head.
  struct Frame {
    const phl::Term* t;
    std::size_t next;
  };
  std::vector<Frame> frames{{&t, 0}};
  while (!frames.empty()) {
    Frame& fr = frames.back();
    const phl::Term& cur = *fr.t;
    if (cur.is_variable()) {
      auto it = std::find_if(context.begin(), context.end(),
                             [&](const phl::TypedVar& v) {
                               return v.name == cur.var().name;
                             });
      if (it == context.end()) {
        throw SortError("unknown variable '" + cur.var().name + "'");
      }
      program_.push_back(
          {true, static_cast<std::uint32_t>(it - context.begin()), 0});
      frames.pop_back();
      continue;
    }
    if (fr.next < cur.args().size()) {
      const phl::Term* child = &cur.args()[fr.next++];
      frames.push_back({child, 0});
      continue;
    }
    program_.push_back({false, static_cast<std::uint32_t>(phl::index(cur.op())),
                        static_cast<std::uint32_t>(cur.args().size())});
    frames.pop_back();
  }
}

Elem CompiledTerm::eval(const PartialStructure& m, const Env& env) const {
  std::vector<Elem> stack;
  stack.reserve(program_.size());
  for (const Step& s : program_) {
    if (s.is_var) {
      stack.push_back(env.at(s.id));
      continue;
    }
    const std::size_t base = stack.size() - s.arity;
    const Elem r = m.apply(phl::OpId{s.id},
                           std::span<const Elem>(stack.data() + base, s.arity));
    if (r == kUndefined) return kUndefined;
    stack.resize(base);
    stack.push_back(r);
  }
  return stack.back();
}

Elem eval_term(const PartialStructure& m, const phl::Term& t,
               const phl::VarContext& context, const Env& env) {
  return CompiledTerm(t, context).eval(m, env);
}

Elem eval_term(const PartialStructure& m, const phl::Term& t,
               const std::map<phl::TypedVar, Elem>& env) {
  phl::VarContext ctx;
  Env values;
  for (const auto& [v, e] : env) {
    ctx.push_back(v);
    values.push_back(e);
  }
  return eval_term(m, t, ctx, values);
}

namespace {

struct CompiledFormula {
  std::vector<std::pair<CompiledTerm, CompiledTerm>> eqs;

  CompiledFormula(const phl::HornFormula& f, const phl::VarContext& ctx) {
    for (const phl::Equation& e : f.conjuncts) {
      eqs.emplace_back(CompiledTerm(e.lhs, ctx), CompiledTerm(e.rhs, ctx));
    }
  }

  bool satisfied(const PartialStructure& m, const Env& env) const {
    for (const auto& [l, r] : eqs) {
      const Elem a = l.eval(m, env);
      if (a == kUndefined) return false;
      if (r.eval(m, env) != a) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<Env> find_counterexample(const PartialStructure& m,
                                       const phl::Sequent& s) {
  const CompiledFormula premise(s.premise, s.context);
  const CompiledFormula conclusion(s.conclusion, s.context);
  std::vector<std::size_t> sizes;
  for (const phl::TypedVar& v : s.context) {
    sizes.push_back(m.carrier_size(v.sort));
    if (sizes.back() == 0) return std::nullopt;
  }
  Env env(s.context.size(), 0);
  while (true) {
    if (premise.satisfied(m, env) && !conclusion.satisfied(m, env)) return env;
    std::size_t i = env.size();
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++env[i]) < sizes[i]) break;
      env[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (env.empty()) return std::nullopt;
  }
}

bool holds(const PartialStructure& m, const phl::Sequent& s) {
  return !find_counterexample(m, s).has_value();
}

ModelReport check_model(const PartialStructure& m) {
  ModelReport report;
  const phl::Theory& th = m.theory();
  for (std::size_t i = 0; i < th.axioms.size(); ++i) {
    const phl::Sequent& ax = th.axioms[i];
    auto env = find_counterexample(m, ax);
    if (!env) continue;
    AxiomFailure f{i, phl::print_sequent(th.signature, ax), {}};
    for (std::size_t k = 0; k < ax.context.size(); ++k) {
      f.witness.emplace_back(ax.context[k].name,
                             m.element_id(ax.context[k].sort, (*env)[k]));
    }
    report.failures.push_back(std::move(f));
  }
  return report;
}

std::string format_report(const ModelReport& report) {
  if (report.ok()) return "all axioms hold\n";
  std::ostringstream os;
  for (const AxiomFailure& f : report.failures) {
    os << "axiom " << f.axiom + 1 << " fails: " << f.axiom_text << '\n';
    os << "  witness:";
    if (f.witness.empty()) os << " (empty context)";
    for (const auto& [v, e] : f.witness) os << ' ' << v << '=' << e;
    os << '\n';
  }
  return os.str();
}

}  // namespace isolab::models
