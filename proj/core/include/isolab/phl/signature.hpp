#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace isolab::phl {

enum class SortId : std::uint32_t {};
enum class OpId : std::uint32_t {};

constexpr std::size_t index(SortId s) noexcept {
  return static_cast<std::size_t>(s);
}
constexpr std::size_t index(OpId o) noexcept {
  return static_cast<std::size_t>(o);
}

struct Sort {
  std::string name;
  friend bool operator==(const Sort&, const Sort&) = default;
};

/// f : A_1 x ... x A_n -> A. Constants have an empty argument list.
struct OpSymbol {
  std::string name;
  std::vector<SortId> arg_sorts;
  SortId result_sort{};

  std::size_t arity() const noexcept { return arg_sorts.size(); }
  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// A multi-sorted signature. Sort names and operation names live in
/// separate namespaces; each is unique within its namespace.
class Signature {
 public:
  SortId add_sort(std::string name);
  OpId add_op(std::string name, std::vector<SortId> arg_sorts,
              SortId result_sort);

  std::size_t sort_count() const noexcept { return sorts_.size(); }
  std::size_t op_count() const noexcept { return ops_.size(); }

  const Sort& sort(SortId s) const { return sorts_.at(index(s)); }
  const OpSymbol& op(OpId o) const { return ops_.at(index(o)); }

  std::span<const Sort> sorts() const noexcept { return sorts_; }
  std::span<const OpSymbol> ops() const noexcept { return ops_; }

  std::optional<SortId> find_sort(std::string_view name) const;
  std::optional<OpId> find_op(std::string_view name) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.sorts_ == b.sorts_ && a.ops_ == b.ops_;
  }

 private:
  std::vector<Sort> sorts_;
  std::vector<OpSymbol> ops_;
  std::unordered_map<std::string, SortId> sort_index_;
  std::unordered_map<std::string, OpId> op_index_;
};

}  // namespace isolab::phl
