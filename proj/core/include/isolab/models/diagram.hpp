#pragma once

#include <span>
#include <vector>

#include "isolab/models/structure.hpp"

namespace isolab::models {

/// The diagram theory T(M) extended by indeterminates: the theory of M plus
/// one defined constant per element, axioms recording each defined table
/// row, and a fresh constant x_A for each requested sort A.
struct Diagram {
  phl::Theory theory;
  std::vector<std::vector<phl::OpId>> constants;  // [sort][element]
  std::vector<phl::OpId> indeterminates;          // parallel to the request
};

/// Constants are named by element id, falling back to "id@Sort" when the id
/// clashes with another name. The indeterminate is "x" for single-sorted
/// theories and "x_<Sort>" otherwise.
Diagram diagram_theory(const PartialStructure& m,
                       std::span<const phl::SortId> indeterminates = {});

}  // namespace isolab::models
