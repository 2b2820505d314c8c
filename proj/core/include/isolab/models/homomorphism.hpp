#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isolab/models/structure.hpp"

namespace isolab::models {

/// A family of total functions h_A : M_A -> N_A, one per sort.
struct Homomorphism {
  std::shared_ptr<const PartialStructure> source;
  std::shared_ptr<const PartialStructure> target;
  std::vector<std::vector<Elem>> maps;  // maps[sort][element of source]

  Elem operator()(phl::SortId s, Elem e) const {
    return maps[phl::index(s)][static_cast<std::size_t>(e)];
  }
};

enum class HomClass {
  NotHom,         // some defined application is not preserved
  Hom,            // preserves, but does not reflect definedness
  HomReflecting,  // preserves and reflects definedness, not bijective
  Iso,            // bijective on every sort and reflects definedness
};

std::string_view to_string(HomClass c);

struct HomReport {
  HomClass cls = HomClass::NotHom;
  bool bijective = false;
  /// Description of the first violated condition (preservation, then
  /// reflection), empty when none is violated.
  std::string witness;
};

/// Classifies h. Throws Error if h is not a well-formed family of total
/// functions between structures over the same signature.
HomReport check_homomorphism(const Homomorphism& h);

Homomorphism identity(std::shared_ptr<const PartialStructure> m);

/// g ∘ h; requires h.target and g.source to be the same structure.
Homomorphism compose(const Homomorphism& g, const Homomorphism& h);

/// The set-theoretic inverse of a sort-wise bijective h, or nullopt.
std::optional<Homomorphism> inverse_function(const Homomorphism& h);

}  // namespace isolab::models
