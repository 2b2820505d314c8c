#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "isolab/phl/theory.hpp"
#include "isolab/theories/data.hpp"

namespace isolab::theories {

enum class TheoryKind { Monoid, CMonoid, Group, Category, StrMonCat };

std::string_view to_string(TheoryKind k);
std::optional<TheoryKind> parse_theory_kind(std::string_view name);

/// The DSL source of a fixed theory.
std::string_view theory_source(TheoryKind k);

/// Parsed theory, built once and shared.
std::shared_ptr<const phl::Theory> build_theory(TheoryKind k);

/// T^J: a sort X_i per object, a total unary α_f : X_i -> X_j per arrow
/// f : i -> j, α_{id_i}(x) = x per object, and α_g(α_f(x)) = α_{g∘f}(x) per
/// composable pair (g, f).
std::shared_ptr<const phl::Theory> build_presheaf_theory(const FiniteCategory& j);

/// Sort and operation names used by the presheaf theory.
std::string presheaf_sort_name(const FiniteCategory& j, Elem object);
std::string presheaf_op_name(const FiniteCategory& j, Elem arrow);

}  // namespace isolab::theories
