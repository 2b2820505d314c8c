#include "isolab/theories/data.hpp"

#include <set>

#include "isolab/error.hpp"

namespace isolab::theories {

namespace {

std::size_t at(Elem e) { return static_cast<std::size_t>(e); }

[[noreturn]] void violated(const std::string& what, const std::string& msg) {
  throw InvariantViolation(what + ": " + msg);
}

void check_ids(const std::string& what, const std::vector<std::string>& ids) {
  std::set<std::string> seen;
  for (const std::string& id : ids) {
    if (id.empty()) violated(what, "empty element id");
    if (!seen.insert(id).second) violated(what, "duplicate id '" + id + "'");
  }
}

bool in_range(Elem e, std::size_t n) { return e >= 0 && at(e) < n; }

template <typename Vec>
std::optional<Elem> find_id(const Vec& ids, std::string_view id) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Elem> FiniteMonoid::find(std::string_view id) const {
  return find_id(elements, id);
}

std::optional<Elem> FiniteMonoid::inverse(Elem a) const {
  for (std::size_t b = 0; b < size(); ++b) {
    const Elem be = static_cast<Elem>(b);
    if (mul(a, be) == unit && mul(be, a) == unit) return be;
  }
  return std::nullopt;
}

bool FiniteMonoid::commutative() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) !=
          mul(static_cast<Elem>(b), static_cast<Elem>(a))) {
        return false;
      }
    }
  }
  return true;
}

void FiniteMonoid::validate() const {
  const std::string what = "monoid '" + name + "'";
  const std::size_t n = size();
  check_ids(what, elements);
  if (n == 0) violated(what, "a monoid needs at least its unit");
  if (!in_range(unit, n)) violated(what, "unit out of range");
  if (table.size() != n * n) violated(what, "multiplication table is not n×n");
  for (Elem e : table) {
    if (!in_range(e, n)) violated(what, "table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Elem ae = static_cast<Elem>(a);
    if (mul(unit, ae) != ae || mul(ae, unit) != ae) {
      violated(what, "unit law fails at " + elements[a]);
    }
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Elem be = static_cast<Elem>(b);
        const Elem ce = static_cast<Elem>(c);
        if (mul(ae, mul(be, ce)) != mul(mul(ae, be), ce)) {
          violated(what, "associativity fails at (" + elements[a] + ", " +
                             elements[b] + ", " + elements[c] + ")");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::from_monoid(FiniteMonoid m) {
  m.validate();
  FiniteGroup g{std::move(m), {}};
  for (std::size_t a = 0; a < g.size(); ++a) {
    auto inv = g.monoid.inverse(static_cast<Elem>(a));
    if (!inv) {
      violated("group '" + g.name() + "'",
               "element " + g.monoid.elements[a] + " has no inverse");
    }
    g.inv.push_back(*inv);
  }
  return g;
}

void FiniteGroup::validate() const {
  monoid.validate();
  const std::string what = "group '" + name() + "'";
  if (inv.size() != size()) violated(what, "inverse table has wrong length");
  for (std::size_t a = 0; a < size(); ++a) {
    const Elem ae = static_cast<Elem>(a);
    if (!in_range(inv[a], size()) || mul(ae, inv[a]) != unit() ||
        mul(inv[a], ae) != unit()) {
      violated(what, "inverse of " + monoid.elements[a] + " is wrong");
    }
  }
}

std::vector<Elem> FiniteCategory::hom(Elem from, Elem to) const {
  std::vector<Elem> out;
  for (std::size_t f = 0; f < arrow_count(); ++f) {
    if (dom[f] == from && cod[f] == to) out.push_back(static_cast<Elem>(f));
  }
  return out;
}

std::optional<Elem> FiniteCategory::find_object(std::string_view i) const {
  return find_id(objects, i);
}

std::optional<Elem> FiniteCategory::find_arrow(std::string_view i) const {
  return find_id(arrows, i);
}

std::optional<Elem> FiniteCategory::inverse(Elem f) const {
  for (Elem g : hom(cod[at(f)], dom[at(f)])) {
    if (compose(g, f) == id[at(dom[at(f)])] &&
        compose(f, g) == id[at(cod[at(f)])]) {
      return g;
    }
  }
  return std::nullopt;
}

void FiniteCategory::validate() const {
  const std::string what = "category '" + name + "'";
  const std::size_t no = object_count();
  const std::size_t na = arrow_count();
  check_ids(what + " objects", objects);
  check_ids(what + " arrows", arrows);
  if (dom.size() != na || cod.size() != na) violated(what, "dom/cod tables have wrong length");
  if (id.size() != no) violated(what, "identity table has wrong length");
  if (comp.size() != na * na) violated(what, "composition table is not arrows×arrows");
  for (std::size_t f = 0; f < na; ++f) {
    if (!in_range(dom[f], no) || !in_range(cod[f], no)) {
      violated(what, "arrow " + arrows[f] + " has an endpoint out of range");
    }
  }
  for (std::size_t i = 0; i < no; ++i) {
    if (!in_range(id[i], na) || dom[at(id[i])] != static_cast<Elem>(i) ||
        cod[at(id[i])] != static_cast<Elem>(i)) {
      violated(what, "identity of " + objects[i] + " is not an endo-arrow on it");
    }
  }
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t f = 0; f < na; ++f) {
      const Elem c = comp[g * na + f];
      const bool composable = cod[f] == dom[g];
      const std::string pair = arrows[g] + "∘" + arrows[f];
      if (composable != (c != kUndefined)) {
        violated(what, pair + (composable ? " must be defined" : " must be undefined"));
      }
      if (!composable) continue;
      if (!in_range(c, na)) violated(what, pair + " out of range");
      if (dom[at(c)] != dom[f] || cod[at(c)] != cod[g]) {
        violated(what, pair + " has the wrong endpoints");
      }
    }
  }
  for (std::size_t f = 0; f < na; ++f) {
    const Elem fe = static_cast<Elem>(f);
    if (compose(fe, id[at(dom[f])]) != fe || compose(id[at(cod[f])], fe) != fe) {
      violated(what, "unit law fails at " + arrows[f]);
    }
  }
  for (std::size_t h = 0; h < na; ++h) {
    for (std::size_t g = 0; g < na; ++g) {
      if (cod[g] != dom[h]) continue;
      for (std::size_t f = 0; f < na; ++f) {
        if (cod[f] != dom[g]) continue;
        const Elem he = static_cast<Elem>(h);
        const Elem ge = static_cast<Elem>(g);
        const Elem fe = static_cast<Elem>(f);
        if (compose(he, compose(ge, fe)) != compose(compose(he, ge), fe)) {
          violated(what, "associativity fails at (" + arrows[h] + ", " +
                             arrows[g] + ", " + arrows[f] + ")");
        }
      }
    }
  }
}

bool FiniteStrictMonCat::commutative() const {
  const std::size_t no = cat.object_count();
  const std::size_t na = cat.arrow_count();
  for (std::size_t a = 0; a < no; ++a) {
    for (std::size_t b = 0; b < no; ++b) {
      if (tensor_ob[a * no + b] != tensor_ob[b * no + a]) return false;
    }
  }
  for (std::size_t f = 0; f < na; ++f) {
    for (std::size_t g = 0; g < na; ++g) {
      if (tensor_arr[f * na + g] != tensor_arr[g * na + f]) return false;
    }
  }
  return true;
}

void FiniteStrictMonCat::validate() const {
  cat.validate();
  const std::string what = "strict monoidal category '" + name() + "'";
  const std::size_t no = cat.object_count();
  const std::size_t na = cat.arrow_count();
  if (tensor_ob.size() != no * no) violated(what, "object tensor table is not n×n");
  if (tensor_arr.size() != na * na) violated(what, "arrow tensor table is not n×n");
  if (!in_range(unit_ob, no) || !in_range(unit_arr, na)) violated(what, "unit out of range");
  for (Elem e : tensor_ob) {
    if (!in_range(e, no)) violated(what, "object tensor entry out of range");
  }
  for (Elem e : tensor_arr) {
    if (!in_range(e, na)) violated(what, "arrow tensor entry out of range");
  }
  FiniteMonoid ob{name() + ".Ob", cat.objects, unit_ob, tensor_ob};
  FiniteMonoid arr{name() + ".Arr", cat.arrows, unit_arr, tensor_arr};
  ob.validate();
  arr.validate();
  for (std::size_t f = 0; f < na; ++f) {
    for (std::size_t g = 0; g < na; ++g) {
      const Elem fg = tensor_arr[f * na + g];
      const std::string pair = cat.arrows[f] + "⊗" + cat.arrows[g];
      if (cat.dom[at(fg)] != tensor_o(cat.dom[f], cat.dom[g])) {
        violated(what, "dom(" + pair + ") is not dom ⊗ dom");
      }
      if (cat.cod[at(fg)] != tensor_o(cat.cod[f], cat.cod[g])) {
        violated(what, "cod(" + pair + ") is not cod ⊗ cod");
      }
    }
  }
  for (std::size_t a = 0; a < no; ++a) {
    for (std::size_t b = 0; b < no; ++b) {
      if (cat.id[at(tensor_ob[a * no + b])] != tensor_a(cat.id[a], cat.id[b])) {
        violated(what, "id(" + cat.objects[a] + "⊗" + cat.objects[b] +
                           ") is not id ⊗ id");
      }
    }
  }
  if (cat.id[at(unit_ob)] != unit_arr) violated(what, "id(I_O) is not I_A");
  // Interchange: (f ⊗ g) ∘ (h ⊗ k) = (f∘h) ⊗ (g∘k) whenever f∘h and g∘k exist.
  for (std::size_t f = 0; f < na; ++f) {
    for (std::size_t h = 0; h < na; ++h) {
      const Elem fh = cat.compose(static_cast<Elem>(f), static_cast<Elem>(h));
      if (fh == kUndefined) continue;
      for (std::size_t g = 0; g < na; ++g) {
        for (std::size_t k = 0; k < na; ++k) {
          const Elem gk = cat.compose(static_cast<Elem>(g), static_cast<Elem>(k));
          if (gk == kUndefined) continue;
          const Elem lhs = cat.compose(tensor_arr[f * na + g], tensor_arr[h * na + k]);
          if (lhs != tensor_a(fh, gk)) {
            violated(what, "interchange fails at (" + cat.arrows[f] + ", " +
                               cat.arrows[g] + ", " + cat.arrows[h] + ", " +
                               cat.arrows[k] + ")");
          }
        }
      }
    }
  }
}

void CrossedModule::validate() const {
  const std::string what = "crossed module '" + name + "'";
  a.validate();
  g.validate();
  const std::size_t na = a.size();
  const std::size_t ng = g.size();
  if (boundary.size() != na) violated(what, "boundary table has wrong length");
  if (action.size() != ng * na) violated(what, "action table is not |G|×|A|");
  for (Elem e : boundary) {
    if (!in_range(e, ng)) violated(what, "boundary entry out of range");
  }
  for (Elem e : action) {
    if (!in_range(e, na)) violated(what, "action entry out of range");
  }
  const auto& an = a.monoid.elements;
  const auto& gn = g.monoid.elements;
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < na; ++y) {
      const Elem xe = static_cast<Elem>(x);
      const Elem ye = static_cast<Elem>(y);
      if (boundary[at(a.mul(xe, ye))] != g.mul(boundary[x], boundary[y])) {
        violated(what, "boundary is not a homomorphism at (" + an[x] + ", " + an[y] + ")");
      }
      // Peiffer: ∂(x) ▷ y = x y x⁻¹
      if (act(boundary[x], ye) != a.mul(a.mul(xe, ye), a.inv[x])) {
        violated(what, "Peiffer identity fails at (" + an[x] + ", " + an[y] + ")");
      }
    }
  }
  for (std::size_t h = 0; h < ng; ++h) {
    const Elem he = static_cast<Elem>(h);
    for (std::size_t x = 0; x < na; ++x) {
      const Elem xe = static_cast<Elem>(x);
      for (std::size_t y = 0; y < na; ++y) {
        const Elem ye = static_cast<Elem>(y);
        if (act(he, a.mul(xe, ye)) != a.mul(act(he, xe), act(he, ye))) {
          violated(what, gn[h] + " does not act by a homomorphism");
        }
      }
      // Equivariance: ∂(h ▷ x) = h ∂(x) h⁻¹
      if (boundary[at(act(he, xe))] != g.mul(g.mul(he, boundary[x]), g.inv[h])) {
        violated(what, "equivariance fails at (" + gn[h] + ", " + an[x] + ")");
      }
      for (std::size_t k = 0; k < ng; ++k) {
        const Elem ke = static_cast<Elem>(k);
        if (act(g.mul(he, ke), xe) != act(he, act(ke, xe))) {
          violated(what, "action is not associative at (" + gn[h] + ", " + gn[k] + ")");
        }
      }
    }
  }
  for (std::size_t x = 0; x < na; ++x) {
    if (act(g.unit(), static_cast<Elem>(x)) != static_cast<Elem>(x)) {
      violated(what, "unit of G does not act trivially");
    }
  }
}

void PresheafData::validate() const {
  category.validate();
  const std::string what = "presheaf '" + name + "'";
  const FiniteCategory& j = category;
  if (sets.size() != j.object_count()) violated(what, "need one set per object");
  if (maps.size() != j.arrow_count()) violated(what, "need one map per arrow");
  for (std::size_t i = 0; i < sets.size(); ++i) check_ids(what, sets[i]);
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    const auto& src = sets[at(j.dom[f])];
    const auto& dst = sets[at(j.cod[f])];
    if (maps[f].size() != src.size()) {
      violated(what, "map for " + j.arrows[f] + " is not total");
    }
    for (Elem e : maps[f]) {
      if (!in_range(e, dst.size())) {
        violated(what, "map for " + j.arrows[f] + " leaves its codomain");
      }
    }
  }
  for (std::size_t i = 0; i < j.object_count(); ++i) {
    const auto& m = maps[at(j.id[i])];
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (m[x] != static_cast<Elem>(x)) {
        violated(what, "identity on " + j.objects[i] + " moves " + sets[i][x]);
      }
    }
  }
  for (std::size_t g = 0; g < j.arrow_count(); ++g) {
    for (std::size_t f = 0; f < j.arrow_count(); ++f) {
      const Elem gf = j.compose(static_cast<Elem>(g), static_cast<Elem>(f));
      if (gf == kUndefined) continue;
      for (std::size_t x = 0; x < maps[f].size(); ++x) {
        if (maps[g][at(maps[f][x])] != maps[at(gf)][x]) {
          violated(what, "F(" + j.arrows[g] + ")∘F(" + j.arrows[f] +
                             ") differs from F(" + j.arrows[at(gf)] + ") at " +
                             sets[at(j.dom[f])][x]);
        }
      }
    }
  }
}

}  // namespace isolab::theories
