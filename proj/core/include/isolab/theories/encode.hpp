#pragma once

#include "isolab/models/structure.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/theories/data.hpp"

namespace isolab::theories {

// Finite algebraic data <-> models of the corresponding theory. Every encode
// validates its input first; every decode validates its output. Both throw
// InvariantViolation with a witness.

/// `kind` selects the monoid or commutative-monoid theory.
models::PartialStructure encode(const FiniteMonoid& m,
                                TheoryKind kind = TheoryKind::Monoid);
models::PartialStructure encode(const FiniteGroup& g);
models::PartialStructure encode(const FiniteCategory& c);
models::PartialStructure encode(const FiniteStrictMonCat& c);
models::PartialStructure encode(const PresheafData& p);

FiniteMonoid decode_monoid(const models::PartialStructure& m);
FiniteGroup decode_group(const models::PartialStructure& m);
FiniteCategory decode_category(const models::PartialStructure& m);
FiniteStrictMonCat decode_strmoncat(const models::PartialStructure& m);
/// The model must be over build_presheaf_theory(j) (matched by signature).
PresheafData decode_presheaf(const models::PartialStructure& m,
                             const FiniteCategory& j);

}  // namespace isolab::theories
