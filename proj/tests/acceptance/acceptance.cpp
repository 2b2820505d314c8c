// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isolab/error.hpp"
#include "isolab/iso/isotropy.hpp"
#include "isolab/nf/algebra.hpp"
#include "isolab/nf/rewrite.hpp"
#include "isolab/suite/properties.hpp"
#include "isolab/theories/constructions.hpp"

namespace {

using namespace isolab;
using theories::DataKind;
using theories::Elem;
using theories::FiniteMonoid;
using theories::FiniteStrictMonCat;
using theories::TaggedData;
namespace fs = std::filesystem;

TaggedData fixture(const std::string& rel) {
  return theories::load_data_file(fs::path(ISOLAB_FIXTURES) / "data" / rel);
}

// Outcome of one criterion: the first problem found, plus a summary.
struct Check {
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

bool same_group(const iso::GroupTable& a, const iso::GroupTable& b) {
  return iso::group_isomorphism(a, b).has_value();
}

// Every monoid of order ≤ 3 up to isomorphism, then five of order 4 and 5.
std::vector<FiniteMonoid> monoid_set() {
  std::vector<FiniteMonoid> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (FiniteMonoid m : theories::enumerate_monoids(n)) {
      m.name = "M" + std::to_string(n) + "_" + std::to_string(out.size());
      out.push_back(std::move(m));
    }
  }
  const auto z2 = theories::cyclic_group(2).monoid;
  out.push_back(theories::cyclic_group(4).monoid);
  out.push_back(theories::product(z2, z2));
  out.push_back(theories::full_transformation2());
  out.push_back(theories::product(z2, theories::semilattice2()));
  out.push_back(theories::with_zero(theories::cyclic_group(4).monoid));
  return out;
}

Check monoid_isotropy() {
  Check c;
  std::size_t elements = 0;
  const auto monoids = monoid_set();
  for (const FiniteMonoid& m : monoids) {
    const auto engine = iso::make_isotropy_engine({DataKind::Monoid, m});
    const auto r = iso::brute_force_isotropy(*engine, {2, 7});
    if (!r.group) {
      c.require(false, m.name + ": brute force not closed");
      continue;
    }
    c.require(same_group(*r.group, iso::inv_elements(m)), m.name + ": not isomorphic to Inv(M)");
    for (const auto& fam : r.elements) {
      const auto& w = std::get<nf::MonoidNF>(fam.at(0)).parts;
      const bool conj = w.size() == 2 && m.inverse(w[0]) == w[1];
      c.require(conj, m.name + ": element " + engine->format(fam) + " is not a x a^-1");
      ++elements;
    }
  }
  c.summary = std::to_string(monoids.size()) + " monoids, " + std::to_string(elements) + " elements";
  return c;
}

std::vector<FiniteStrictMonCat> smc_set(bool with_fixtures) {
  std::vector<FiniteStrictMonCat> out;
  for (const FiniteMonoid& m : monoid_set()) {
    out.push_back(theories::delta_nabla(m, theories::Variant::Discrete));
    out.push_back(theories::delta_nabla(m, theories::Variant::Indiscrete));
  }
  if (with_fixtures) {
    for (const char* f : {"thin_z4.json", "thin_sl2.json", "delta_z2.json", "nabla_z3.json",
                          "nabla_t2.json"}) {
      out.push_back(std::get<FiniteStrictMonCat>(fixture(f).value));
    }
  }
  return out;
}

// s_O = a ⊗ x_O ⊗ b and s_A = id(a) ⊗ x_A ⊗ id(b), with b = a⁻¹.
bool decomposes(const FiniteStrictMonCat& c, const iso::Family& fam) {
  const auto& so = std::get<nf::SmcWord>(fam.at(0));
  const auto& sa = std::get<nf::SmcWord>(fam.at(1));
  if (so.letters != std::vector{nf::SmcLetter::XO} || so.consts.size() != 2) return false;
  if (sa.letters != std::vector{nf::SmcLetter::XA} || sa.consts.size() != 2) return false;
  const Elem a = so.consts[0], b = so.consts[1];
  if (c.tensor_o(a, b) != c.unit_ob || c.tensor_o(b, a) != c.unit_ob) return false;
  return sa.consts[0] == c.cat.id[static_cast<std::size_t>(a)] &&
         sa.consts[1] == c.cat.id[static_cast<std::size_t>(b)];
}

Check picard_theorem() {
  Check c;
  std::size_t count = 0, elements = 0;
  for (const FiniteStrictMonCat& smc : smc_set(true)) {
    const auto engine = iso::make_isotropy_engine({DataKind::StrMonCat, smc});
    const auto r = iso::brute_force_isotropy(*engine, {2, 7});
    ++count;
    if (!r.group) {
      c.require(false, smc.name() + ": brute force not closed");
      continue;
    }
    c.require(same_group(*r.group, iso::picard(smc)), smc.name() + ": not isomorphic to Pic(C)");
    for (const auto& fam : r.elements) {
      c.require(decomposes(smc, fam), smc.name() + ": " + engine->format(fam) + " does not decompose");
      ++elements;
    }
  }
  c.summary = std::to_string(count) + " categories, " + std::to_string(elements) + " elements";
  return c;
}

Check presheaf_isotropy() {
  Check c;
  const std::vector<std::pair<std::string, std::vector<std::string>>> groups{
      {"bz2", {"regular", "trivial", "regular_plus_fixed"}},
      {"bz3", {"regular", "trivial", "regular_plus_fixed"}},
      {"bz4", {"regular", "trivial", "quotient"}},
      {"bs3", {"natural", "sign", "trivial"}},
      {"chain3", {"constant", "collapse", "grow"}},
      {"parallel", {"split", "equal", "swap"}},
  };
  const std::vector<std::size_t> expected{2, 3, 4, 1, 1, 1};
  std::size_t models = 0;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const auto& [j, names] = groups[k];
    std::vector<iso::GroupTable> found;
    for (const std::string& n : names) {
      const TaggedData d = fixture("presheaves/" + j + "_" + n + ".json");
      const auto& p = std::get<theories::PresheafData>(d.value);
      for (const auto& s : p.sets) c.require(s.size() <= 4, j + "_" + n + ": carrier larger than 4");
      const auto engine = iso::make_isotropy_engine(d);
      const auto r = iso::brute_force_isotropy(*engine, {2, 7});
      ++models;
      if (!r.group) {
        c.require(false, j + "_" + n + ": brute force not closed");
        continue;
      }
      c.require(same_group(*r.group, iso::center_auts(p.category)), j + "_" + n + ": not Aut(Id_J)");
      found.push_back(*r.group);
    }
    for (const auto& g : found) {
      c.require(same_group(g, found.front()), j + ": groups differ across models");
      c.require(g.size() == expected[k], j + ": unexpected order " + std::to_string(g.size()));
      if (j.rfind("bz", 0) == 0) c.require(g.abelian() && iso::describe_group(g) == "Z" + j.substr(2), j + ": not cyclic");
    }
  }
  c.summary = std::to_string(models) + " presheaves over 6 categories";
  return c;
}

Check closed_form_dispatch() {
  Check c;
  for (const char* f : {"crossed_z2_z4.json", "crossed_z3_s3.json"}) {
    const TaggedData d = fixture(f);
    const auto& x = std::get<theories::CrossedModule>(d.value);
    c.require(same_group(iso::closed_form_isotropy(d), iso::GroupTable::from_group(x.g)),
              std::string(f) + ": not G");
  }
  c.require(iso::closed_form_isotropy(fixture("ssmc_nabla_z2.json")).size() == 1,
            "symmetric fixture: not trivial");
  const TaggedData mset = fixture("mset_z2_sl2.json");
  c.require(iso::closed_form_isotropy(mset).size() == 2, "M-set: order is not 2");
  c.summary = "2 crossed modules, 1 symmetric, 1 M-set";
  return c;
}

void take(Check& c, const suite::PropertyResult& r, std::size_t& checked) {
  checked += r.checked;
  c.require(r.ok(), r.name + ": " + r.first_failure);
}

Check word_problem_suite() {
  Check c;
  std::size_t checked = 0;
  const auto t2 = theories::full_transformation2();
  const auto nabla_z3 = theories::delta_nabla(theories::cyclic_group(3).monoid,
                                              theories::Variant::Indiscrete);
  const auto delta_t2 = theories::delta_nabla(t2, theories::Variant::Discrete);
  const std::vector<std::pair<nf::EngineKind, TaggedData>> engines{
      {nf::EngineKind::Monoid, {DataKind::Monoid, t2}},
      {nf::EngineKind::CMonoid, {DataKind::CMonoid, theories::cyclic_group(3).monoid}},
      {nf::EngineKind::Group, {DataKind::Group, theories::symmetric_group3()}},
      {nf::EngineKind::SmcObject, {DataKind::StrMonCat, nabla_z3}},
      {nf::EngineKind::SmcArrow, {DataKind::StrMonCat, delta_t2}},
      {nf::EngineKind::Presheaf, fixture("presheaves/parallel_split.json")},
  };
  std::uint64_t seed = 1;
  for (const auto& [kind, data] : engines) {
    const auto engine = nf::make_engine(kind, data);
    take(c, suite::dual_strategy(*engine, seed++, 1000, 12), checked);
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const FiniteMonoid& m : theories::enumerate_monoids(n)) take(c, suite::monoid_subst_laws(m, 3), checked);
  }

  // x m1 x m1m2 x against x e m1 e x e m1m2 x, in T2 with m1, m2 non-units
  const Elem m1 = *t2.find("10"), m2 = *t2.find("00");
  const std::string n1 = t2.elements[m1], n12 = t2.elements[t2.mul(m1, m2)];
  const auto engine = nf::make_engine(nf::EngineKind::Monoid, {DataKind::Monoid, t2});
  const auto a = engine->reduce(engine->parse("x " + n1 + " x " + n1 + " " + t2.elements[m2] + " x"));
  const auto b = engine->reduce(engine->parse("x e " + n1 + " e x e " + n12 + " x"));
  c.require(a && b && *a == *b, "congruence example: normal forms differ");
  c.summary = std::to_string(checked) + " instances";
  return c;
}

Check arr_preservation() {
  Check c;
  std::size_t checked = 0, count = 0;
  for (const FiniteStrictMonCat& smc : smc_set(true)) {
    if (smc.cat.object_count() > 4) continue;
    take(c, suite::arr_preservation(smc, 3), checked);
    ++count;
  }
  c.summary = std::to_string(count) + " categories, " + std::to_string(checked) + " instances";
  return c;
}

Check iso_reflection() {
  Check c;
  std::size_t checked = 0;
  take(c, suite::iso_reflection(7, 200), checked);
  c.require(checked >= 200, "fewer than 200 samples");
  c.summary = std::to_string(checked) + " structures";
  return c;
}

Check theta_sigma() {
  Check c;
  std::size_t count = 0, elements = 0;
  for (const FiniteStrictMonCat& smc : smc_set(true)) {
    const auto engine = iso::make_isotropy_engine({DataKind::StrMonCat, smc});
    const iso::GroupTable pic = iso::picard(smc);
    std::vector<std::string> images;
    for (const std::string& label : pic.labels()) {
      const Elem a = *smc.cat.find_object(label);
      const iso::Family t = iso::theta(smc, a);
      c.require(iso::sigma(smc, t) == a, smc.name() + ": sigma(theta(" + label + ")) differs");
      images.push_back(engine->format(t.at(0)));
      ++elements;
    }
    std::sort(images.begin(), images.end());
    c.require(std::adjacent_find(images.begin(), images.end()) == images.end(),
              smc.name() + ": theta is not injective");
    ++count;
  }
  c.summary = std::to_string(count) + " categories, " + std::to_string(elements) + " elements";
  return c;
}

struct Criterion {
  int number;
  std::string name;
  double limit_s;  // 0 = no limit
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "monoid isotropy is Inv(M)", 10, monoid_isotropy},
      {2, "strict monoidal isotropy is the Picard group", 60, picard_theorem},
      {3, "presheaf isotropy is Aut(Id_J)", 30, presheaf_isotropy},
      {4, "closed-form dispatch", 0, closed_form_dispatch},
      {5, "word-problem property suite", 0, word_problem_suite},
      {6, "Arr preservation", 0, arr_preservation},
      {7, "isomorphism reflection", 0, iso_reflection},
      {8, "sigma after theta is the identity", 0, theta_sigma},
  };
  int failed = 0;
  for (const Criterion& k : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = k.run();
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (k.limit_s > 0 && s > k.limit_s) {
      std::ostringstream o;
      o << "took " << s << " s, limit " << k.limit_s << " s";
      c.problems.push_back(o.str());
    }
    const bool ok = c.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %d %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", k.number, k.name.c_str(),
                c.summary.c_str(), s);
    for (std::size_t i = 0; i < c.problems.size() && i < 5; ++i) {
      std::printf("    %s\n", c.problems[i].c_str());
    }
    if (c.problems.size() > 5) std::printf("    ... %zu more\n", c.problems.size() - 5);
  }
  return failed == 0 ? 0 : 1;
}
