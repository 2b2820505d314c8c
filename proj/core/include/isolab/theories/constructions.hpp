#pragma once

#include <string>
#include <vector>

#include "isolab/theories/data.hpp"

namespace isolab::theories {

// ---- monoids and groups ----------------------------------------------------

/// Z_n written additively with elements "0".."n-1".
FiniteGroup cyclic_group(std::size_t n);
/// Permutations of {0, 1, 2} named by their one-line images ("012", ...);
/// product is composition, (p·q)(i) = p(q(i)).
FiniteGroup symmetric_group3();
/// Two-element semilattice {e, a} with aa = a.
FiniteMonoid semilattice2();
/// All maps {0,1} -> {0,1} named by their images ("01" is the identity),
/// with product f·g = f∘g.
FiniteMonoid full_transformation2();
/// m with an absorbing element "z" adjoined.
FiniteMonoid with_zero(const FiniteMonoid& m);
/// Componentwise product; elements named "a_b".
FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b);
FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
/// Z(M), the submonoid of central elements.
FiniteMonoid center(const FiniteMonoid& m);

/// One representative of every isomorphism class of monoids of order n
/// (n ≤ 4), elements named "e", "a", "b", "c" with "e" the unit.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t n);
bool monoids_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

// ---- categories --------------------------------------------------------------

/// BM: one object "o" whose endo-arrows are the elements of M.
FiniteCategory classifying_category(const FiniteMonoid& m);
/// The poset 0 < 1 < ... < n-1; arrows named "i_j" for i ≤ j.
FiniteCategory chain(std::size_t n);
/// Objects a, b; arrows ida, idb and two parallel arrows u, v : a -> b.
FiniteCategory parallel_pair();

// ---- strict monoidal categories ---------------------------------------------

enum class Variant { Discrete, Indiscrete };

/// Δ(M) or ∇(M). Arrow a -> b is named "a_b"; in Δ(M) only "a_a" exists.
FiniteStrictMonCat delta_nabla(const FiniteMonoid& m, Variant v);
enum class Part { Ob, Arr };
FiniteMonoid ob_arr(const FiniteStrictMonCat& c, Part which);

/// The thin category on a monoid m with a -> b iff b ∈ a·N for a submonoid
/// N of central elements; tensor is multiplication. Fails validation unless
/// the relation is a preorder compatible with the product.
FiniteStrictMonCat thin_monoidal(const FiniteMonoid& m, const std::vector<Elem>& n,
                                 std::string name);
/// One object, arrows the elements of a commutative monoid m; composition
/// and tensor are both the product.
FiniteStrictMonCat one_object_monoidal(const FiniteMonoid& m, std::string name);

}  // namespace isolab::theories
