#include "isolab/theories/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "isolab/error.hpp"

namespace isolab::theories {

namespace {

std::size_t at(Elem e) { return static_cast<std::size_t>(e); }

template <typename Fn>
FiniteMonoid tabulate(std::string name, std::vector<std::string> elements, Elem unit,
                      Fn&& mul) {
  const std::size_t n = elements.size();
  FiniteMonoid m{std::move(name), std::move(elements), unit, std::vector<Elem>(n * n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      m.table[a * n + b] = mul(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  m.validate();
  return m;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error("cyclic_group: order must be positive");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return FiniteGroup::from_monoid(
      tabulate("Z" + std::to_string(n), std::move(ids), 0, [n](Elem a, Elem b) {
        return static_cast<Elem>((at(a) + at(b)) % n);
      }));
}

FiniteGroup symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> ids;
  for (const auto& q : perms) {
    ids.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  }
  return FiniteGroup::from_monoid(tabulate("S3", std::move(ids), 0, [&](Elem a, Elem b) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = perms[at(a)][static_cast<std::size_t>(perms[at(b)][i])];
    return static_cast<Elem>(std::find(perms.begin(), perms.end(), r) - perms.begin());
  }));
}

FiniteMonoid semilattice2() {
  return tabulate("SL2", {"e", "a"}, 0, [](Elem x, Elem y) { return std::max(x, y); });
}

FiniteMonoid full_transformation2() {
  // Element 2·f(0) + f(1) is the map f, so "01" is the identity.
  auto image = [](Elem f, Elem k) { return k == 0 ? f / 2 : f % 2; };
  return tabulate("T2", {"00", "01", "10", "11"}, 1, [&](Elem f, Elem g) {
    return static_cast<Elem>(2 * image(f, image(g, 0)) + image(f, image(g, 1)));
  });
}

FiniteMonoid with_zero(const FiniteMonoid& m) {
  m.validate();
  std::vector<std::string> ids = m.elements;
  ids.push_back("z");
  const Elem z = static_cast<Elem>(m.size());
  return tabulate(m.name + "0", std::move(ids), m.unit, [&](Elem a, Elem b) {
    return (a == z || b == z) ? z : m.mul(a, b);
  });
}

FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b) {
  a.validate();
  b.validate();
  const std::size_t nb = b.size();
  std::vector<std::string> ids;
  for (const std::string& x : a.elements) {
    for (const std::string& y : b.elements) ids.push_back(x + "_" + y);
  }
  const Elem unit = static_cast<Elem>(at(a.unit) * nb + at(b.unit));
  return tabulate(a.name + "x" + b.name, std::move(ids), unit, [&](Elem p, Elem q) {
    const Elem x = a.mul(static_cast<Elem>(at(p) / nb), static_cast<Elem>(at(q) / nb));
    const Elem y = b.mul(static_cast<Elem>(at(p) % nb), static_cast<Elem>(at(q) % nb));
    return static_cast<Elem>(at(x) * nb + at(y));
  });
}

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
  return FiniteGroup::from_monoid(product(a.monoid, b.monoid));
}

FiniteMonoid center(const FiniteMonoid& m) {
  m.validate();
  std::vector<Elem> keep;
  for (std::size_t a = 0; a < m.size(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < m.size() && central; ++b) {
      central = m.mul(static_cast<Elem>(a), static_cast<Elem>(b)) ==
                m.mul(static_cast<Elem>(b), static_cast<Elem>(a));
    }
    if (central) keep.push_back(static_cast<Elem>(a));
  }
  std::vector<std::string> ids;
  for (Elem a : keep) ids.push_back(m.elements[at(a)]);
  auto pos = [&](Elem a) {
    return static_cast<Elem>(std::find(keep.begin(), keep.end(), a) - keep.begin());
  };
  return tabulate("Z(" + m.name + ")", std::move(ids), pos(m.unit), [&](Elem a, Elem b) {
    return pos(m.mul(keep[at(a)], keep[at(b)]));
  });
}

bool monoids_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[at(a.unit)] != b.unit) continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        ok = perm[at(a.mul(static_cast<Elem>(x), static_cast<Elem>(y)))] ==
             b.mul(perm[x], perm[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t n) {
  if (n == 0 || n > 4) throw Error("enumerate_monoids: order must be in 1..4");
  static const char* kNames[] = {"e", "a", "b", "c"};
  std::vector<std::string> ids(kNames, kNames + n);
  // Element 0 is the unit; the (n-1)² non-unit products are free.
  const std::size_t free = (n - 1) * (n - 1);
  std::vector<Elem> choice(free, 0);
  std::vector<FiniteMonoid> found;
  while (true) {
    FiniteMonoid m{"", ids, 0, std::vector<Elem>(n * n)};
    for (std::size_t x = 0; x < n; ++x) {
      m.table[x] = static_cast<Elem>(x);
      m.table[x * n] = static_cast<Elem>(x);
    }
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) {
        m.table[x * n + y] = choice[(x - 1) * (n - 1) + (y - 1)];
      }
    }
    bool assoc = true;
    for (std::size_t x = 0; x < n && assoc; ++x) {
      for (std::size_t y = 0; y < n && assoc; ++y) {
        for (std::size_t z = 0; z < n && assoc; ++z) {
          const Elem xe = static_cast<Elem>(x);
          const Elem ye = static_cast<Elem>(y);
          const Elem ze = static_cast<Elem>(z);
          assoc = m.mul(xe, m.mul(ye, ze)) == m.mul(m.mul(xe, ye), ze);
        }
      }
    }
    if (assoc && std::none_of(found.begin(), found.end(), [&](const FiniteMonoid& f) {
          return monoids_isomorphic(f, m);
        })) {
      m.name = "M" + std::to_string(n) + "_" + std::to_string(found.size());
      found.push_back(std::move(m));
    }
    std::size_t i = 0;
    while (i < free) {
      if (static_cast<std::size_t>(++choice[i]) < n) break;
      choice[i] = 0;
      ++i;
    }
    if (i == free) break;
  }
  return found;
}

FiniteCategory classifying_category(const FiniteMonoid& m) {
  m.validate();
  const std::size_t n = m.size();
  FiniteCategory c;
  c.name = "B" + m.name;
  c.objects = {"o"};
  c.arrows = m.elements;
  c.dom.assign(n, 0);
  c.cod.assign(n, 0);
  c.id = {m.unit};
  c.comp = m.table;
  c.validate();
  return c;
}

FiniteCategory chain(std::size_t n) {
  FiniteCategory c;
  c.name = "chain" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ends.emplace_back(i, j);
      c.arrows.push_back(std::to_string(i) + "_" + std::to_string(j));
      c.dom.push_back(static_cast<Elem>(i));
      c.cod.push_back(static_cast<Elem>(j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    c.id.push_back(static_cast<Elem>(
        std::find(ends.begin(), ends.end(), std::make_pair(i, i)) - ends.begin()));
  }
  const std::size_t na = ends.size();
  c.comp.assign(na * na, kUndefined);
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t f = 0; f < na; ++f) {
      if (ends[f].second != ends[g].first) continue;
      const auto target = std::make_pair(ends[f].first, ends[g].second);
      c.comp[g * na + f] = static_cast<Elem>(
          std::find(ends.begin(), ends.end(), target) - ends.begin());
    }
  }
  c.validate();
  return c;
}

FiniteCategory parallel_pair() {
  FiniteCategory c;
  c.name = "parallel";
  c.objects = {"a", "b"};
  c.arrows = {"ida", "idb", "u", "v"};
  c.dom = {0, 1, 0, 0};
  c.cod = {0, 1, 1, 1};
  c.id = {0, 1};
  c.comp.assign(16, kUndefined);
  auto set = [&](Elem g, Elem f, Elem r) { c.comp[at(g) * 4 + at(f)] = r; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(3, 0, 3);
  set(1, 2, 2);
  set(1, 3, 3);
  c.validate();
  return c;
}

namespace {

// Thin category on objects of m with arrows given by a predicate; arrow
// a -> b is named "a_b" and tensor is the monoid product.
FiniteStrictMonCat thin_on(const FiniteMonoid& m, std::string name,
                           const std::vector<std::vector<bool>>& rel) {
  const std::size_t n = m.size();
  FiniteStrictMonCat c;
  c.cat.name = std::move(name);
  c.cat.objects = m.elements;
  std::vector<std::vector<Elem>> arrow(n, std::vector<Elem>(n, kUndefined));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel[a][b]) continue;
      arrow[a][b] = static_cast<Elem>(c.cat.arrows.size());
      c.cat.arrows.push_back(m.elements[a] + "_" + m.elements[b]);
      c.cat.dom.push_back(static_cast<Elem>(a));
      c.cat.cod.push_back(static_cast<Elem>(b));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (arrow[a][a] == kUndefined) {
      throw InvariantViolation(c.cat.name + ": relation is not reflexive at " +
                               m.elements[a]);
    }
    c.cat.id.push_back(arrow[a][a]);
  }
  const std::size_t na = c.cat.arrows.size();
  c.cat.comp.assign(na * na, kUndefined);
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t f = 0; f < na; ++f) {
      if (c.cat.cod[f] != c.cat.dom[g]) continue;
      const Elem r = arrow[at(c.cat.dom[f])][at(c.cat.cod[g])];
      if (r == kUndefined) {
        throw InvariantViolation(c.cat.name + ": relation is not transitive");
      }
      c.cat.comp[g * na + f] = r;
    }
  }
  c.tensor_ob = m.table;
  c.tensor_arr.assign(na * na, 0);
  for (std::size_t f = 0; f < na; ++f) {
    for (std::size_t g = 0; g < na; ++g) {
      const Elem d = m.mul(c.cat.dom[f], c.cat.dom[g]);
      const Elem e = m.mul(c.cat.cod[f], c.cat.cod[g]);
      const Elem r = arrow[at(d)][at(e)];
      if (r == kUndefined) {
        throw InvariantViolation(c.cat.name + ": relation is not compatible with the product");
      }
      c.tensor_arr[f * na + g] = r;
    }
  }
  c.unit_ob = m.unit;
  c.unit_arr = arrow[at(m.unit)][at(m.unit)];
  c.validate();
  return c;
}

}  // namespace

FiniteStrictMonCat delta_nabla(const FiniteMonoid& m, Variant v) {
  m.validate();
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, v == Variant::Indiscrete));
  for (std::size_t a = 0; a < n; ++a) rel[a][a] = true;
  return thin_on(m, (v == Variant::Discrete ? "Delta(" : "Nabla(") + m.name + ")", rel);
}

FiniteMonoid ob_arr(const FiniteStrictMonCat& c, Part which) {
  FiniteMonoid m = which == Part::Ob
                       ? FiniteMonoid{c.name() + ".Ob", c.cat.objects, c.unit_ob, c.tensor_ob}
                       : FiniteMonoid{c.name() + ".Arr", c.cat.arrows, c.unit_arr, c.tensor_arr};
  m.validate();
  return m;
}

FiniteStrictMonCat thin_monoidal(const FiniteMonoid& m, const std::vector<Elem>& n,
                                 std::string name) {
  m.validate();
  const std::size_t size = m.size();
  std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    for (Elem k : n) rel[a][at(m.mul(static_cast<Elem>(a), k))] = true;
  }
  return thin_on(m, std::move(name), rel);
}

FiniteStrictMonCat one_object_monoidal(const FiniteMonoid& m, std::string name) {
  m.validate();
  FiniteStrictMonCat c;
  c.cat = classifying_category(m);
  c.cat.name = std::move(name);
  c.tensor_ob = {0};
  c.tensor_arr = m.table;
  c.unit_ob = 0;
  c.unit_arr = m.unit;
  c.validate();
  return c;
}

}  // namespace isolab::theories
