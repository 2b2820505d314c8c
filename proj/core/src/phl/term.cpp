#include "isolab/phl/term.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "isolab/error.hpp"

namespace isolab::phl {

struct Term::Node {
  std::variant<TypedVar, OpId> head;
  std::vector<Term> args;
  std::size_t size = 1;
};

Term Term::variable(std::string name, SortId sort) {
  auto node = std::make_shared<Node>();
  node->head = TypedVar{std::move(name), sort};
  return Term(std::move(node));
}

Term Term::apply(OpId op, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->head = op;
  for (const Term& a : args) node->size += a.size();
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::is_variable() const noexcept {
  return std::holds_alternative<TypedVar>(node_->head);
}

const TypedVar& Term::var() const { return std::get<TypedVar>(node_->head); }

OpId Term::op() const { return std::get<OpId>(node_->head); }

std::span<const Term> Term::args() const { return node_->args; }

std::size_t Term::size() const noexcept { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->size != b.node_->size) return false;
  return a.node_->head == b.node_->head && a.node_->args == b.node_->args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_variable() != b.is_variable()) {
    return a.is_variable() ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }
  if (a.is_variable()) return a.var() <=> b.var();
  if (auto c = index(a.op()) <=> index(b.op()); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.node_->args.begin(), a.node_->args.end(), b.node_->args.begin(),
      b.node_->args.end());
}

namespace {

SortId check(const Signature& sig, const Term& t, const VarContext* context) {
  if (t.is_variable()) {
    const TypedVar& v = t.var();
    if (context != nullptr) {
      auto it = std::find_if(context->begin(), context->end(),
                             [&](const TypedVar& c) { return c.name == v.name; });
      if (it == context->end()) {
        throw SortError("unknown variable '" + v.name + "'");
      }
      if (it->sort != v.sort) {
        throw SortError("variable '" + v.name + "' used at sort '" +
                        sig.sort(v.sort).name + "' but declared '" +
                        sig.sort(it->sort).name + "'");
      }
    }
    if (index(v.sort) >= sig.sort_count()) {
      throw SortError("variable '" + v.name + "' has an unknown sort");
    }
    return v.sort;
  }
  if (index(t.op()) >= sig.op_count()) {
    throw SortError("term uses an operation outside the signature");
  }
  const OpSymbol& op = sig.op(t.op());
  if (t.args().size() != op.arity()) {
    throw SortError("arity mismatch: '" + op.name + "' expects " +
                    std::to_string(op.arity()) + " argument(s), got " +
                    std::to_string(t.args().size()));
  }
  for (std::size_t i = 0; i < op.arity(); ++i) {
    const SortId got = check(sig, t.args()[i], context);
    if (got != op.arg_sorts[i]) {
      throw SortError("sort mismatch: argument " + std::to_string(i + 1) +
                      " of '" + op.name + "' must have sort '" +
                      sig.sort(op.arg_sorts[i]).name + "', got '" +
                      sig.sort(got).name + "'");
    }
  }
  return op.result_sort;
}

Term subst(const Term& t, const Bindings& bindings) {
  if (t.is_variable()) {
    if (auto it = bindings.find(t.var()); it != bindings.end()) return it->second;
    return t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(subst(a, bindings));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::apply(t.op(), std::move(args)) : t;
}

void collect(const Term& t, std::vector<TypedVar>& out, std::set<TypedVar>& seen) {
  if (t.is_variable()) {
    if (seen.insert(t.var()).second) out.push_back(t.var());
    return;
  }
  for (const Term& a : t.args()) collect(a, out, seen);
}

}  // namespace

SortId infer_sort(const Signature& sig, const Term& t, const VarContext& context) {
  return check(sig, t, &context);
}

SortId sort_of(const Signature& sig, const Term& t) { return check(sig, t, nullptr); }

Term substitute(const Signature& sig, const Term& t, const Bindings& bindings) {
  for (const auto& [var, replacement] : bindings) {
    const SortId got = sort_of(sig, replacement);
    if (got != var.sort) {
      throw SortError("binding for '" + var.name + "' has sort '" +
                      sig.sort(got).name + "', expected '" +
                      sig.sort(var.sort).name + "'");
    }
  }
  return subst(t, bindings);
}

std::vector<TypedVar> free_variables(const Term& t) {
  std::vector<TypedVar> out;
  std::set<TypedVar> seen;
  collect(t, out, seen);
  return out;
}

}  // namespace isolab::phl
