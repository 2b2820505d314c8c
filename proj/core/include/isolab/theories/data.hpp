#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolab/models/structure.hpp"

namespace isolab::theories {

using models::Elem;
using models::kUndefined;

/// Finite monoid given by its multiplication table; elements are indices.
struct FiniteMonoid {
  std::string name;
  std::vector<std::string> elements;
  Elem unit = 0;
  std::vector<Elem> table;  // table[a * n + b] = a·b

  std::size_t size() const noexcept { return elements.size(); }
  Elem mul(Elem a, Elem b) const {
    return table[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }
  std::optional<Elem> find(std::string_view id) const;
  /// Two-sided inverse of a, if any.
  std::optional<Elem> inverse(Elem a) const;
  bool commutative() const;

  /// Throws InvariantViolation naming a witness if not a monoid.
  void validate() const;

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;
};

/// A finite monoid in which every element is invertible.
struct FiniteGroup {
  FiniteMonoid monoid;
  std::vector<Elem> inv;

  /// Derives the inverse table; throws if some element has no inverse.
  static FiniteGroup from_monoid(FiniteMonoid m);

  std::size_t size() const noexcept { return monoid.size(); }
  Elem mul(Elem a, Elem b) const { return monoid.mul(a, b); }
  Elem unit() const noexcept { return monoid.unit; }
  const std::string& name() const noexcept { return monoid.name; }
  void validate() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};

/// Finite category with comp(g, f) = g∘f, kUndefined unless cod f = dom g.
struct FiniteCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<Elem> dom, cod;  // per arrow
  std::vector<Elem> id;        // per object
  std::vector<Elem> comp;      // comp[g * arrows + f]

  std::size_t object_count() const noexcept { return objects.size(); }
  std::size_t arrow_count() const noexcept { return arrows.size(); }
  Elem compose(Elem g, Elem f) const {
    return comp[static_cast<std::size_t>(g) * arrow_count() + static_cast<std::size_t>(f)];
  }
  std::vector<Elem> hom(Elem from, Elem to) const;
  bool is_identity(Elem f) const { return id[static_cast<std::size_t>(dom[static_cast<std::size_t>(f)])] == f; }
  std::optional<Elem> find_object(std::string_view id) const;
  std::optional<Elem> find_arrow(std::string_view id) const;
  /// Inverse of f if f is an isomorphism.
  std::optional<Elem> inverse(Elem f) const;

  void validate() const;

  friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;
};

/// A strict monoidal category: a monoid object in finite categories.
struct FiniteStrictMonCat {
  FiniteCategory cat;
  std::vector<Elem> tensor_ob;   // objects × objects
  std::vector<Elem> tensor_arr;  // arrows × arrows
  Elem unit_ob = 0;
  Elem unit_arr = 0;

  const std::string& name() const noexcept { return cat.name; }
  Elem tensor_o(Elem a, Elem b) const {
    return tensor_ob[static_cast<std::size_t>(a) * cat.object_count() + static_cast<std::size_t>(b)];
  }
  Elem tensor_a(Elem f, Elem g) const {
    return tensor_arr[static_cast<std::size_t>(f) * cat.arrow_count() + static_cast<std::size_t>(g)];
  }
  /// True when ⊗ is commutative on objects and on arrows.
  bool commutative() const;

  void validate() const;

  friend bool operator==(const FiniteStrictMonCat&, const FiniteStrictMonCat&) = default;
};

/// ∂ : A -> G with a left action of G on A by automorphisms.
struct CrossedModule {
  std::string name;
  FiniteGroup a;
  FiniteGroup g;
  std::vector<Elem> boundary;  // per element of A
  std::vector<Elem> action;    // action[g * |A| + a] = g ▷ a

  Elem act(Elem gg, Elem aa) const {
    return action[static_cast<std::size_t>(gg) * a.size() + static_cast<std::size_t>(aa)];
  }
  /// Checks both groups, that ∂ is a homomorphism, that the action is by
  /// automorphisms, equivariance ∂(g▷a) = g·∂a·g⁻¹ and Peiffer ∂a▷b = aba⁻¹.
  void validate() const;

  friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

/// A covariant functor F : J -> FinSet.
struct PresheafData {
  std::string name;
  FiniteCategory category;
  std::vector<std::vector<std::string>> sets;  // per object
  std::vector<std::vector<Elem>> maps;         // per arrow f : i -> j, F(i) -> F(j)

  void validate() const;

  friend bool operator==(const PresheafData&, const PresheafData&) = default;
};

}  // namespace isolab::theories
