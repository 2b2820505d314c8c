#include "isolab/models/diagram.hpp"

#include <map>
#include <set>

namespace isolab::models {

using phl::OpId;
using phl::SortId;

Diagram diagram_theory(const PartialStructure& m,
                       std::span<const SortId> indeterminates) {
  const phl::Signature& base = m.signature();
  Diagram d;
  d.theory = m.theory();
  d.theory.name = m.theory().name + "_diagram";
  phl::Signature& sig = d.theory.signature;

  std::vector<std::string> x_names;
  for (SortId s : indeterminates) {
    x_names.push_back(base.sort_count() == 1 ? "x" : "x_" + base.sort(s).name);
  }

  // An id needs qualification if it names an op, an indeterminate, or an
  // element of another sort.
  std::map<std::string, int> uses;
  for (std::size_t s = 0; s < base.sort_count(); ++s) {
    for (const std::string& id : m.carrier(SortId{static_cast<std::uint32_t>(s)})) {
      ++uses[id];
    }
  }
  std::set<std::string> taken(x_names.begin(), x_names.end());
  for (const phl::OpSymbol& op : base.ops()) taken.insert(op.name);

  d.constants.resize(base.sort_count());
  for (std::size_t s = 0; s < base.sort_count(); ++s) {
    const SortId sid{static_cast<std::uint32_t>(s)};
    for (const std::string& id : m.carrier(sid)) {
      std::string name = id;
      if (uses[id] > 1 || taken.count(id) != 0) name = id + "@" + base.sort(sid).name;
      d.constants[s].push_back(sig.add_op(name, {}, sid));
    }
  }
  for (std::size_t i = 0; i < indeterminates.size(); ++i) {
    d.indeterminates.push_back(sig.add_op(x_names[i], {}, indeterminates[i]));
  }

  for (std::size_t s = 0; s < base.sort_count(); ++s) {
    for (OpId c : d.constants[s]) {
      d.theory.axioms.push_back({{}, {}, {{phl::defined(phl::Term::apply(c))}}});
    }
  }
  for (std::size_t f = 0; f < base.op_count(); ++f) {
    const OpId fid{static_cast<std::uint32_t>(f)};
    const phl::OpSymbol& op = base.op(fid);
    m.for_each_row(fid, [&](std::span<const Elem> args, Elem result) {
      std::vector<phl::Term> terms;
      for (std::size_t i = 0; i < args.size(); ++i) {
        terms.push_back(phl::Term::apply(
            d.constants[phl::index(op.arg_sorts[i])][static_cast<std::size_t>(args[i])]));
      }
      phl::Term lhs = phl::Term::apply(fid, std::move(terms));
      phl::Term rhs = phl::Term::apply(
          d.constants[phl::index(op.result_sort)][static_cast<std::size_t>(result)]);
      d.theory.axioms.push_back({{}, {}, {{phl::Equation{lhs, rhs}}}});
    });
  }
  return d;
}

}  // namespace isolab::models
