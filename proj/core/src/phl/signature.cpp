#include "isolab/phl/signature.hpp"

#include "isolab/error.hpp"

namespace isolab::phl {

SortId Signature::add_sort(std::string name) {
  if (sort_index_.contains(name)) {
    throw SortError("duplicate sort '" + name + "'");
  }
  const auto id = static_cast<SortId>(sorts_.size());
  sort_index_.emplace(name, id);
  sorts_.push_back(Sort{std::move(name)});
  return id;
}

OpId Signature::add_op(std::string name, std::vector<SortId> arg_sorts,
                       SortId result_sort) {
  if (op_index_.contains(name)) {
    throw SortError("duplicate operation '" + name + "'");
  }
  for (SortId s : arg_sorts) {
    if (index(s) >= sorts_.size()) {
      throw SortError("operation '" + name + "' uses an unknown sort");
    }
  }
  if (index(result_sort) >= sorts_.size()) {
    throw SortError("operation '" + name + "' has an unknown result sort");
  }
  const auto id = static_cast<OpId>(ops_.size());
  op_index_.emplace(name, id);
  ops_.push_back(OpSymbol{std::move(name), std::move(arg_sorts), result_sort});
  return id;
}

std::optional<SortId> Signature::find_sort(std::string_view name) const {
  if (auto it = sort_index_.find(std::string(name)); it != sort_index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<OpId> Signature::find_op(std::string_view name) const {
  if (auto it = op_index_.find(std::string(name)); it != op_index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

}  // namespace isolab::phl
