#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isolab/theories/data.hpp"

namespace isolab::iso {

/// A finite group by labels and multiplication table. Element 0 is the
/// identity; construction checks the group axioms.
class GroupTable {
 public:
  /// Throws InvariantViolation if `table` is not a group with identity 0.
  GroupTable(std::vector<std::string> labels, std::vector<std::size_t> table);

  static GroupTable trivial(std::string label = "e");
  static GroupTable from_group(const theories::FiniteGroup& g);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::size_t order(std::size_t a) const;
  bool abelian() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

/// An isomorphism G -> H as the image of each element of G, or nullopt.
/// Backtracks over images of a generating set; both groups must have at
/// most 64 elements (Error otherwise).
std::optional<std::vector<std::size_t>> group_isomorphism(const GroupTable& g,
                                                          const GroupTable& h);

/// "trivial", "Z4", "Z2 x Z2", "S3", "D4", "Q8", or "group of order n".
std::string describe_group(const GroupTable& g);

/// Inv(M): the units of M with the induced product.
GroupTable inv_elements(const theories::FiniteMonoid& m);
/// The invertible objects of C under ⊗.
GroupTable picard(const theories::FiniteStrictMonCat& c);
/// Aut(Id_J): families of automorphisms ψ_i : i -> i with ψ_k∘f = f∘ψ_j for
/// every f : j -> k, under componentwise composition.
GroupTable center_auts(const theories::FiniteCategory& j);
/// True when no object of J has a non-identity automorphism.
bool rigid(const theories::FiniteCategory& j);
/// The endomorphism monoid J(i, i).
theories::FiniteMonoid endo_monoid(const theories::FiniteCategory& j, theories::Elem object);

}  // namespace isolab::iso
