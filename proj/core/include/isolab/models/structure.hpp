#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/phl/theory.hpp"

namespace isolab::models {

/// Position of an element inside the carrier of its sort.
using Elem = std::int32_t;
inline constexpr Elem kUndefined = -1;

/// A finite partial Σ-structure: one carrier per sort and one partial table
/// per operation symbol. Built through StructureBuilder; immutable after.
class PartialStructure {
 public:
  const phl::Theory& theory() const noexcept { return *theory_; }
  const std::shared_ptr<const phl::Theory>& theory_ptr() const noexcept {
    return theory_;
  }
  const phl::Signature& signature() const noexcept {
    return theory_->signature;
  }
  const std::string& name() const noexcept { return name_; }

  std::size_t carrier_size(phl::SortId s) const {
    return carriers_.at(phl::index(s)).size();
  }
  std::span<const std::string> carrier(phl::SortId s) const {
    return carriers_.at(phl::index(s));
  }
  const std::string& element_id(phl::SortId s, Elem e) const {
    return carriers_.at(phl::index(s)).at(static_cast<std::size_t>(e));
  }
  std::optional<Elem> find_element(phl::SortId s, std::string_view id) const;

  /// f(args), or kUndefined when the tuple lies outside dom(f).
  Elem apply(phl::OpId f, std::span<const Elem> args) const;

  /// Number of argument tuples in dom(f).
  std::size_t domain_size(phl::OpId f) const;

  /// Calls fn(args, result) for every defined row of f in row-major order.
  template <typename Fn>
  void for_each_row(phl::OpId f, Fn&& fn) const;

  friend bool operator==(const PartialStructure& a, const PartialStructure& b);

 private:
  friend class StructureBuilder;
  std::size_t offset(phl::OpId f, std::span<const Elem> args) const;

  std::shared_ptr<const phl::Theory> theory_;
  std::string name_;
  std::vector<std::vector<std::string>> carriers_;
  std::vector<std::map<std::string, Elem, std::less<>>> index_;
  std::vector<std::vector<Elem>> tables_;  // row-major over argument carriers
};

/// Incremental construction of a PartialStructure. Rows may be set in any
/// order; tables are laid out when build() is called.
class StructureBuilder {
 public:
  explicit StructureBuilder(std::shared_ptr<const phl::Theory> theory,
                            std::string name = {});

  Elem add_element(phl::SortId s, std::string id);
  Elem add_element(std::string_view sort, std::string id);

  /// Records f(args) = result. Re-setting a row to a different value throws.
  void set(phl::OpId f, std::vector<Elem> args, Elem result);
  void set(std::string_view op, const std::vector<std::string>& args,
           const std::string& result);

  std::size_t carrier_size(phl::SortId s) const;

  PartialStructure build() &&;

 private:
  phl::SortId sort_named(std::string_view name) const;
  Elem element_named(phl::SortId s, const std::string& id) const;

  PartialStructure m_;
  std::map<std::pair<std::uint32_t, std::vector<Elem>>, Elem> rows_;
};

template <typename Fn>
void PartialStructure::for_each_row(phl::OpId f, Fn&& fn) const {
  const phl::OpSymbol& op = signature().op(f);
  const std::vector<Elem>& table = tables_[phl::index(f)];
  std::vector<Elem> args(op.arity(), 0);
  for (std::size_t pos = 0; pos < table.size(); ++pos) {
    std::size_t rem = pos;
    for (std::size_t i = op.arity(); i-- > 0;) {
      const std::size_t n = carrier_size(op.arg_sorts[i]);
      args[i] = static_cast<Elem>(rem % n);
      rem /= n;
    }
    if (table[pos] != kUndefined) {
      fn(std::span<const Elem>(args), table[pos]);
    }
  }
}

}  // namespace isolab::models
