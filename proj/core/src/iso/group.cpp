#include "isolab/iso/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isolab/error.hpp"
#include "isolab/theories/constructions.hpp"

namespace isolab::iso {

using theories::Elem;

namespace {

std::size_t at(Elem e) { return static_cast<std::size_t>(e); }

}  // namespace

GroupTable::GroupTable(std::vector<std::string> labels, std::vector<std::size_t> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = size();
  if (n == 0) throw InvariantViolation("a group needs an identity element");
  if (table_.size() != n * n) throw InvariantViolation("multiplication table has the wrong size");
  for (std::size_t v : table_) {
    if (v >= n) throw InvariantViolation("multiplication table leaves the group");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw InvariantViolation("element 0 is not an identity: fails at " + labels_[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw InvariantViolation("not associative at (" + labels_[a] + ", " + labels_[b] +
                                   ", " + labels_[c] + ")");
        }
      }
    }
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (b < n && !(mul(a, b) == 0 && mul(b, a) == 0)) ++b;
    if (b == n) throw InvariantViolation(labels_[a] + " has no inverse");
    inverse_[a] = b;
  }
}

GroupTable GroupTable::trivial(std::string label) { return GroupTable({std::move(label)}, {0}); }

GroupTable GroupTable::from_group(const theories::FiniteGroup& g) {
  // Relabel so that the unit comes first.
  std::vector<Elem> order{g.unit()};
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (static_cast<Elem>(a) != g.unit()) order.push_back(static_cast<Elem>(a));
  }
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[at(order[i])] = i;
  std::vector<std::string> labels;
  for (Elem a : order) labels.push_back(g.monoid.elements[at(a)]);
  std::vector<std::size_t> table;
  for (Elem a : order) {
    for (Elem b : order) table.push_back(pos[at(g.mul(a, b))]);
  }
  return GroupTable(std::move(labels), std::move(table));
}

std::size_t GroupTable::order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

bool GroupTable::abelian() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

namespace {

// Greedy generating set: repeatedly add the first element outside the
// subgroup generated so far.
std::vector<std::size_t> generators(const GroupTable& g) {
  std::vector<bool> in(g.size(), false);
  in[0] = true;
  std::vector<std::size_t> gens;
  std::vector<std::size_t> members{0};
  for (std::size_t a = 1; a < g.size(); ++a) {
    if (in[a]) continue;
    gens.push_back(a);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t p = g.mul(members[i], s);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return gens;
}

// Extends generator images to a homomorphism by breadth-first closure;
// nullopt on any inconsistency or a non-injective result.
std::optional<std::vector<std::size_t>> extend(const GroupTable& g, const GroupTable& h,
                                               const std::vector<std::size_t>& gens,
                                               const std::vector<std::size_t>& images) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(g.size(), kUnset);
  map[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t a = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t p = g.mul(a, gens[k]);
      const std::size_t q = h.mul(map[a], images[k]);
      if (map[p] == kUnset) {
        map[p] = q;
        queue.push_back(p);
      } else if (map[p] != q) {
        return std::nullopt;
      }
    }
  }
  // Generated and well defined on words; check the homomorphism law fully.
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return std::nullopt;
    }
  }
  std::vector<bool> hit(h.size(), false);
  for (std::size_t v : map) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return map;
}

}  // namespace

std::optional<std::vector<std::size_t>> group_isomorphism(const GroupTable& g,
                                                          const GroupTable& h) {
  if (g.size() > 64 || h.size() > 64) throw Error("group isomorphism is limited to 64 elements");
  if (g.size() != h.size()) return std::nullopt;
  std::map<std::size_t, int> og, oh;
  for (std::size_t a = 0; a < g.size(); ++a) ++og[g.order(a)];
  for (std::size_t a = 0; a < h.size(); ++a) ++oh[h.order(a)];
  if (og != oh) return std::nullopt;

  const std::vector<std::size_t> gens = generators(g);
  std::vector<std::size_t> images(gens.size());
  std::optional<std::vector<std::size_t>> found;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      found = extend(g, h, gens, images);
      return found.has_value();
    }
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (h.order(b) != g.order(gens[k])) continue;
      images[k] = b;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

namespace {

// Invariant factors d_1 | d_2 | ... of every abelian group of order n,
// with the multiset of element orders of each.
std::vector<std::pair<std::vector<std::size_t>, std::map<std::size_t, int>>> abelian_types(
    std::size_t n) {
  std::vector<std::vector<std::size_t>> types;
  auto rec = [&](auto&& self, std::size_t rest, std::vector<std::size_t> factors) -> void {
    if (rest == 1) {
      types.push_back(factors);
      return;
    }
    for (std::size_t d = 2; d <= rest; ++d) {
      if (rest % d != 0) continue;
      if (!factors.empty() && d % factors.back() != 0) continue;
      auto next = factors;
      next.push_back(d);
      self(self, rest / d, next);
    }
  };
  rec(rec, n, {});
  std::vector<std::pair<std::vector<std::size_t>, std::map<std::size_t, int>>> out;
  for (const auto& f : types) {
    std::map<std::size_t, int> orders;
    std::vector<std::size_t> idx(f.size(), 0);
    for (;;) {
      std::size_t o = 1;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t oi = f[i] / std::gcd(f[i], idx[i]);
        o = std::lcm(o, oi);
      }
      ++orders[o];
      std::size_t i = 0;
      while (i < f.size() && ++idx[i] == f[i]) idx[i++] = 0;
      if (i == f.size()) break;
    }
    out.emplace_back(f, orders);
  }
  return out;
}

}  // namespace

std::string describe_group(const GroupTable& g) {
  const std::size_t n = g.size();
  if (n == 1) return "trivial";
  std::map<std::size_t, int> orders;
  for (std::size_t a = 0; a < n; ++a) ++orders[g.order(a)];
  if (g.abelian()) {
    for (const auto& [factors, counts] : abelian_types(n)) {
      if (counts != orders) continue;
      std::string out;
      for (std::size_t f : factors) out += (out.empty() ? "Z" : " x Z") + std::to_string(f);
      return out;
    }
  }
  if (n == 6) return "S3";
  if (n == 8) return orders[2] == 5 ? "D4" : "Q8";
  return "group of order " + std::to_string(n);
}

GroupTable inv_elements(const theories::FiniteMonoid& m) {
  std::vector<Elem> units{m.unit};
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (static_cast<Elem>(a) != m.unit && m.inverse(static_cast<Elem>(a))) {
      units.push_back(static_cast<Elem>(a));
    }
  }
  std::vector<std::size_t> pos(m.size(), 0);
  for (std::size_t i = 0; i < units.size(); ++i) pos[at(units[i])] = i;
  std::vector<std::string> labels;
  for (Elem a : units) labels.push_back(m.elements[at(a)]);
  std::vector<std::size_t> table;
  for (Elem a : units) {
    for (Elem b : units) table.push_back(pos[at(m.mul(a, b))]);
  }
  return GroupTable(std::move(labels), std::move(table));
}

GroupTable picard(const theories::FiniteStrictMonCat& c) {
  return inv_elements(theories::ob_arr(c, theories::Part::Ob));
}

theories::FiniteMonoid endo_monoid(const theories::FiniteCategory& j, Elem object) {
  const std::vector<Elem> arrows = j.hom(object, object);
  theories::FiniteMonoid m;
  m.name = "End(" + j.objects[at(object)] + ")";
  std::vector<std::size_t> pos(j.arrow_count(), 0);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    pos[at(arrows[i])] = i;
    m.elements.push_back(j.arrows[at(arrows[i])]);
  }
  m.unit = static_cast<Elem>(pos[at(j.id[at(object)])]);
  for (Elem f : arrows) {
    for (Elem g : arrows) m.table.push_back(static_cast<Elem>(pos[at(j.compose(f, g))]));
  }
  m.validate();
  return m;
}

bool rigid(const theories::FiniteCategory& j) {
  for (std::size_t i = 0; i < j.object_count(); ++i) {
    for (Elem f : j.hom(static_cast<Elem>(i), static_cast<Elem>(i))) {
      if (!j.is_identity(f) && j.inverse(f)) return false;
    }
  }
  return true;
}

GroupTable center_auts(const theories::FiniteCategory& j) {
  const std::size_t n = j.object_count();
  std::vector<std::vector<Elem>> autos(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Elem f : j.hom(static_cast<Elem>(i), static_cast<Elem>(i))) {
      if (j.inverse(f)) autos[i].push_back(f);
    }
    // Identity first so that the identity family is enumerated first.
    std::stable_partition(autos[i].begin(), autos[i].end(),
                          [&](Elem f) { return j.is_identity(f); });
  }

  std::vector<std::vector<Elem>> families;
  std::vector<Elem> psi(n);
  auto natural = [&]() {
    for (std::size_t f = 0; f < j.arrow_count(); ++f) {
      const Elem fe = static_cast<Elem>(f);
      if (j.compose(psi[at(j.cod[f])], fe) != j.compose(fe, psi[at(j.dom[f])])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (natural()) families.push_back(psi);
      return;
    }
    for (Elem f : autos[i]) {
      psi[i] = f;
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  std::vector<std::string> labels;
  for (const auto& fam : families) {
    std::string label;
    for (std::size_t i = 0; i < n; ++i) label += (i > 0 ? "," : "") + j.arrows[at(fam[i])];
    labels.push_back(n == 1 ? label : "(" + label + ")");
  }
  std::vector<std::size_t> table;
  for (const auto& a : families) {
    for (const auto& b : families) {
      std::vector<Elem> ab(n);
      for (std::size_t i = 0; i < n; ++i) ab[i] = j.compose(a[i], b[i]);
      auto it = std::find(families.begin(), families.end(), ab);
      table.push_back(static_cast<std::size_t>(it - families.begin()));
    }
  }
  return GroupTable(std::move(labels), std::move(table));
}

}  // namespace isolab::iso
