#include "isolab/models/structure.hpp"

#include "isolab/error.hpp"

namespace isolab::models {

using phl::index;
using phl::OpId;
using phl::SortId;

std::optional<Elem> PartialStructure::find_element(SortId s,
                                                   std::string_view id) const {
  const auto& idx = index_.at(index(s));
  auto it = idx.find(id);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t PartialStructure::offset(OpId f, std::span<const Elem> args) const {
  const phl::OpSymbol& op = signature().op(f);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < op.arity(); ++i) {
    pos = pos * carrier_size(op.arg_sorts[i]) + static_cast<std::size_t>(args[i]);
  }
  return pos;
}

Elem PartialStructure::apply(OpId f, std::span<const Elem> args) const {
  const phl::OpSymbol& op = signature().op(f);
  if (args.size() != op.arity()) {
    throw SortError("operation '" + op.name + "' applied to " +
                    std::to_string(args.size()) + " arguments");
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] < 0 ||
        static_cast<std::size_t>(args[i]) >= carrier_size(op.arg_sorts[i])) {
      return kUndefined;
    }
  }
  return tables_[index(f)][offset(f, args)];
}

std::size_t PartialStructure::domain_size(OpId f) const {
  std::size_t n = 0;
  for (Elem e : tables_[index(f)]) n += e != kUndefined ? 1 : 0;
  return n;
}

bool operator==(const PartialStructure& a, const PartialStructure& b) {
  return *a.theory_ == *b.theory_ && a.carriers_ == b.carriers_ &&
         a.tables_ == b.tables_;
}

StructureBuilder::StructureBuilder(std::shared_ptr<const phl::Theory> theory,
                                   std::string name) {
  if (!theory) throw Error("structure requires a theory");
  const std::size_t nsorts = theory->signature.sort_count();
  m_.theory_ = std::move(theory);
  m_.name_ = std::move(name);
  m_.carriers_.resize(nsorts);
  m_.index_.resize(nsorts);
}

SortId StructureBuilder::sort_named(std::string_view name) const {
  auto s = m_.signature().find_sort(name);
  if (!s) throw SortError("unknown sort '" + std::string(name) + "'");
  return *s;
}

Elem StructureBuilder::element_named(SortId s, const std::string& id) const {
  auto e = m_.find_element(s, id);
  if (!e) {
    throw InvariantViolation("element '" + id + "' is not in the carrier of '" +
                             m_.signature().sort(s).name + "'");
  }
  return *e;
}

Elem StructureBuilder::add_element(SortId s, std::string id) {
  auto& carrier = m_.carriers_.at(index(s));
  const Elem e = static_cast<Elem>(carrier.size());
  if (!m_.index_[index(s)].emplace(id, e).second) {
    throw InvariantViolation("element '" + id + "' listed twice in sort '" +
                             m_.signature().sort(s).name + "'");
  }
  carrier.push_back(std::move(id));
  return e;
}

Elem StructureBuilder::add_element(std::string_view sort, std::string id) {
  return add_element(sort_named(sort), std::move(id));
}

void StructureBuilder::set(OpId f, std::vector<Elem> args, Elem result) {
  const phl::OpSymbol& op = m_.signature().op(f);
  if (args.size() != op.arity()) {
    throw InvariantViolation("row for '" + op.name + "' has " +
                             std::to_string(args.size()) + " arguments, expected " +
                             std::to_string(op.arity()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] < 0 || static_cast<std::size_t>(args[i]) >=
                           carrier_size(op.arg_sorts[i])) {
      throw InvariantViolation("row for '" + op.name + "': argument " +
                               std::to_string(i + 1) + " out of carrier");
    }
  }
  if (result < 0 ||
      static_cast<std::size_t>(result) >= carrier_size(op.result_sort)) {
    throw InvariantViolation("row for '" + op.name + "': result out of carrier");
  }
  auto [it, fresh] = rows_.emplace(
      std::make_pair(static_cast<std::uint32_t>(index(f)), std::move(args)),
      result);
  if (!fresh && it->second != result) {
    throw InvariantViolation("conflicting rows for '" + op.name + "'");
  }
}

void StructureBuilder::set(std::string_view op,
                           const std::vector<std::string>& args,
                           const std::string& result) {
  auto f = m_.signature().find_op(op);
  if (!f) throw SortError("unknown operation '" + std::string(op) + "'");
  const phl::OpSymbol& sym = m_.signature().op(*f);
  if (args.size() != sym.arity()) {
    throw InvariantViolation("row for '" + sym.name + "' has " +
                             std::to_string(args.size()) +
                             " arguments, expected " +
                             std::to_string(sym.arity()));
  }
  std::vector<Elem> ix;
  for (std::size_t i = 0; i < args.size(); ++i) {
    ix.push_back(element_named(sym.arg_sorts[i], args[i]));
  }
  set(*f, std::move(ix), element_named(sym.result_sort, result));
}

std::size_t StructureBuilder::carrier_size(SortId s) const {
  return m_.carrier_size(s);
}

PartialStructure StructureBuilder::build() && {
  const phl::Signature& sig = m_.signature();
  m_.tables_.assign(sig.op_count(), {});
  for (std::size_t f = 0; f < sig.op_count(); ++f) {
    std::size_t n = 1;
    for (SortId s : sig.ops()[f].arg_sorts) n *= m_.carrier_size(s);
    m_.tables_[f].assign(n, kUndefined);
  }
  for (const auto& [key, result] : rows_) {
    const OpId f{key.first};
    m_.tables_[index(f)][m_.offset(f, key.second)] = result;
  }
  rows_.clear();
  return std::move(m_);
}

}  // namespace isolab::models
