#include "isolab/suite/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "isolab/error.hpp"
#include "isolab/models/homomorphism.hpp"
#include "isolab/nf/algebra.hpp"
#include "isolab/theories/constructions.hpp"

namespace isolab::suite {

using models::Elem;
using nf::MonoidNF;
using nf::PresheafNF;
using nf::SmcLetter;
using nf::SmcSort;
using nf::SmcWord;
using phl::Term;

void PropertyResult::fail(std::string what) {
  if (failures++ == 0) first_failure = std::move(what);
}

namespace {

// Every vector of length `len` over {0..base-1}.
void for_each_tuple(std::size_t len, std::size_t base,
                    const std::function<void(const std::vector<Elem>&)>& fn) {
  std::vector<Elem> v(len, 0);
  if (base == 0 && len > 0) return;
  while (true) {
    fn(v);
    std::size_t i = 0;
    for (; i < len; ++i) {
      if (static_cast<std::size_t>(++v[i]) < base) break;
      v[i] = 0;
    }
    if (i == len) return;
  }
}

std::vector<std::vector<MonoidNF>> monoid_words(const theories::FiniteMonoid& m, std::size_t max_x) {
  std::vector<std::vector<MonoidNF>> by_x(max_x + 1);
  for (std::size_t k = 0; k <= max_x; ++k) {
    for_each_tuple(k + 1, m.size(), [&](const std::vector<Elem>& parts) {
      by_x[k].push_back(MonoidNF{parts});
    });
  }
  return by_x;
}

// s interpreted in M with x := a.
Elem eval_at(const theories::FiniteMonoid& m, const MonoidNF& s, Elem a) {
  Elem r = s.parts.front();
  for (std::size_t i = 1; i < s.parts.size(); ++i) r = m.mul(m.mul(r, a), s.parts[i]);
  return r;
}

std::vector<nf::WordToken> word_tokens(const MonoidNF& u) {
  std::vector<nf::WordToken> out;
  for (std::size_t i = 0; i < u.parts.size(); ++i) {
    if (i > 0) out.push_back({true, 0, 0, 1});
    out.push_back({false, u.parts[i], 0, 1});
  }
  return out;
}

}  // namespace

PropertyResult monoid_subst_laws(const theories::FiniteMonoid& m, std::size_t max_x) {
  PropertyResult r{"monoid-subst-laws"};
  const nf::MonoidAlgebra alg(m);
  const auto by_x = monoid_words(m, max_x);
  std::vector<MonoidNF> all;
  for (const auto& ws : by_x) all.insert(all.end(), ws.begin(), ws.end());

  auto show = [&](const MonoidNF& u) { return "[" + alg.format(u) + "]"; };
  for (const MonoidNF& s : all) {
    ++r.checked;
    if (alg.subst(s, alg.generic()) != s) r.fail("subst(s, x) != s for s = " + show(s));
    if (alg.subst(alg.generic(), s) != s) r.fail("subst(x, s) != s for s = " + show(s));
    for (Elem a = 0; a < static_cast<Elem>(m.size()); ++a) {
      if (alg.subst(s, alg.constant(a)) != alg.constant(eval_at(m, s, a))) {
        r.fail("subst(s, a) disagrees with evaluation for s = " + show(s));
      }
    }
  }
  for (const MonoidNF& u : all) {
    for (const MonoidNF& v : all) {
      ++r.checked;
      std::vector<nf::WordToken> cat = word_tokens(u);
      const auto tv = word_tokens(v);
      cat.insert(cat.end(), tv.begin(), tv.end());
      if (alg.mul(u, v) != alg.normalize(cat)) {
        r.fail("mul vs concatenation: " + show(u) + " * " + show(v));
      }
      // subst(u, v) is u with x := v; evaluate pointwise as an oracle
      const MonoidNF uv = alg.subst(u, v);
      for (Elem a = 0; a < static_cast<Elem>(m.size()); ++a) {
        if (eval_at(m, uv, a) != eval_at(m, u, eval_at(m, v, a))) {
          r.fail("subst vs evaluation: " + show(u) + " at " + show(v));
        }
      }
    }
  }
  // associativity of substitution and compatibility with mul
  for (const MonoidNF& s : all) {
    for (const MonoidNF& u : all) {
      for (const MonoidNF& v : all) {
        ++r.checked;
        if (alg.subst(alg.subst(s, u), v) != alg.subst(s, alg.subst(u, v))) {
          r.fail("subst not associative at " + show(s) + ", " + show(u) + ", " + show(v));
        }
        if (alg.subst(alg.mul(s, u), v) != alg.mul(alg.subst(s, v), alg.subst(u, v))) {
          r.fail("subst does not distribute over mul at " + show(s) + ", " + show(u));
        }
      }
    }
  }
  return r;
}

namespace {

struct SmcContext {
  std::vector<SmcLetter> object_letters;
  std::vector<SmcLetter> arrow_letters;
  SmcSort indeterminate;
};

const SmcContext kObjectContext{{SmcLetter::XO}, {SmcLetter::IdXO}, SmcSort::Object};
const SmcContext kArrowContext{{SmcLetter::DomXA, SmcLetter::CodXA},
                               {SmcLetter::XA, SmcLetter::IdDomXA, SmcLetter::IdCodXA},
                               SmcSort::Arrow};

// Words of one sort with exactly k letters.
std::vector<SmcWord> smc_words(const theories::FiniteStrictMonCat& c, SmcSort sort,
                               const std::vector<SmcLetter>& letters, std::size_t k) {
  const std::size_t consts =
      sort == SmcSort::Object ? c.cat.object_count() : c.cat.arrow_count();
  std::vector<SmcWord> out;
  for_each_tuple(k + 1, consts, [&](const std::vector<Elem>& cs) {
    for_each_tuple(k, letters.size(), [&](const std::vector<Elem>& ls) {
      SmcWord w{sort, cs, {}};
      for (Elem l : ls) w.letters.push_back(letters[static_cast<std::size_t>(l)]);
      out.push_back(std::move(w));
    });
  });
  return out;
}

struct GradedWords {
  std::vector<std::vector<SmcWord>> objects, arrows;  // by letter count
};

GradedWords graded(const theories::FiniteStrictMonCat& c, const SmcContext& ctx, std::size_t max) {
  GradedWords g;
  for (std::size_t k = 0; k <= max; ++k) {
    g.objects.push_back(smc_words(c, SmcSort::Object, ctx.object_letters, k));
    g.arrows.push_back(smc_words(c, SmcSort::Arrow, ctx.arrow_letters, k));
  }
  return g;
}

// Calls fn on every tuple (w_1, ..., w_n) drawn from `by_k` whose letter
// counts sum to at most `budget`.
void for_each_graded(const std::vector<std::vector<SmcWord>>& by_k, std::size_t n, std::size_t budget,
                     const std::function<void(const std::vector<const SmcWord*>&)>& fn) {
  std::vector<const SmcWord*> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (cur.size() == n) {
      fn(cur);
      return;
    }
    for (std::size_t k = 0; k <= left && k < by_k.size(); ++k) {
      for (const SmcWord& w : by_k[k]) {
        cur.push_back(&w);
        rec(left - k);
        cur.pop_back();
      }
    }
  };
  rec(budget);
}

std::size_t letters_of(const SmcWord& w) { return w.letters.size(); }

void check_smc_context(const nf::SmcAlgebra& alg, const SmcContext& ctx, std::size_t max,
                       PropertyResult& r) {
  const auto& c = alg.category();
  const GradedWords g = graded(c, ctx, max);
  auto show = [&](const SmcWord& w) { return "[" + alg.format(w) + "]"; };
  const SmcWord io = alg.unit(SmcSort::Object);
  const SmcWord ia = alg.unit(SmcSort::Arrow);

  ++r.checked;
  if (alg.id(io) != ia) r.fail("id(I_O) != I_A");

  for (const auto* by_k : {&g.objects, &g.arrows}) {
    const SmcWord& unit = by_k == &g.objects ? io : ia;
    for_each_graded(*by_k, 1, max, [&](const auto& w) {
      ++r.checked;
      if (alg.tensor(*w[0], unit) != *w[0] || alg.tensor(unit, *w[0]) != *w[0]) {
        r.fail("tensor unit law fails at " + show(*w[0]));
      }
    });
    for_each_graded(*by_k, 3, max, [&](const auto& w) {
      ++r.checked;
      if (alg.tensor(*w[0], alg.tensor(*w[1], *w[2])) != alg.tensor(alg.tensor(*w[0], *w[1]), *w[2])) {
        r.fail("tensor not associative at " + show(*w[0]) + ", " + show(*w[1]) + ", " + show(*w[2]));
      }
    });
  }

  for_each_graded(g.objects, 1, max, [&](const auto& w) {
    ++r.checked;
    const SmcWord i = alg.id(*w[0]);
    if (alg.dom(i) != *w[0] || alg.cod(i) != *w[0]) r.fail("dom/cod of id fail at " + show(*w[0]));
  });
  for_each_graded(g.objects, 2, max, [&](const auto& w) {
    ++r.checked;
    if (alg.id(alg.tensor(*w[0], *w[1])) != alg.tensor(alg.id(*w[0]), alg.id(*w[1]))) {
      r.fail("id does not preserve tensor at " + show(*w[0]) + ", " + show(*w[1]));
    }
  });

  for_each_graded(g.arrows, 1, max, [&](const auto& w) {
    ++r.checked;
    const SmcWord& f = *w[0];
    const auto l = alg.comp(f, alg.id(alg.dom(f)));
    const auto rr = alg.comp(alg.id(alg.cod(f)), f);
    if (!l || *l != f || !rr || *rr != f) r.fail("identity law fails at " + show(f));
  });

  // composable pairs (g, f), graded by total letters
  std::vector<std::vector<std::pair<SmcWord, SmcWord>>> pairs(max + 1);
  for_each_graded(g.arrows, 2, max, [&](const auto& w) {
    ++r.checked;
    const SmcWord& gg = *w[0];
    const SmcWord& f = *w[1];
    if (alg.dom(alg.tensor(gg, f)) != alg.tensor(alg.dom(gg), alg.dom(f)) ||
        alg.cod(alg.tensor(gg, f)) != alg.tensor(alg.cod(gg), alg.cod(f))) {
      r.fail("dom/cod do not preserve tensor at " + show(gg) + ", " + show(f));
    }
    const auto gf = alg.comp(gg, f);
    if (gf.has_value() != (alg.dom(gg) == alg.cod(f))) {
      r.fail("composite definedness wrong at " + show(gg) + " . " + show(f));
      return;
    }
    if (!gf) return;
    if (alg.dom(*gf) != alg.dom(f) || alg.cod(*gf) != alg.cod(gg)) {
      r.fail("dom/cod of composite wrong at " + show(gg) + " . " + show(f));
    }
    pairs[letters_of(gg) + letters_of(f)].emplace_back(gg, f);
  });

  for_each_graded(g.arrows, 3, max, [&](const auto& w) {
    const auto hg = alg.comp(*w[0], *w[1]);
    const auto gf = alg.comp(*w[1], *w[2]);
    if (!hg || !gf) return;
    ++r.checked;
    const auto a = alg.comp(*w[0], *gf);
    const auto b = alg.comp(*hg, *w[2]);
    if (!a || !b || *a != *b) r.fail("composition not associative at " + show(*w[0]));
  });

  // interchange: (g ⊗ g') ∘ (f ⊗ f') = (g ∘ f) ⊗ (g' ∘ f')
  for (std::size_t k1 = 0; k1 <= max; ++k1) {
    for (std::size_t k2 = 0; k1 + k2 <= max; ++k2) {
      for (const auto& [g1, f1] : pairs[k1]) {
        for (const auto& [g2, f2] : pairs[k2]) {
          ++r.checked;
          const auto lhs = alg.comp(alg.tensor(g1, g2), alg.tensor(f1, f2));
          const SmcWord rhs = alg.tensor(*alg.comp(g1, f1), *alg.comp(g2, f2));
          if (!lhs || *lhs != rhs) r.fail("interchange fails at " + show(g1) + ", " + show(g2));
        }
      }
    }
  }

  // substituting a constant is a strict monoidal functor into C
  const std::size_t values = ctx.indeterminate == SmcSort::Object ? c.cat.object_count()
                                                                  : c.cat.arrow_count();
  for (Elem v = 0; v < static_cast<Elem>(values); ++v) {
    const SmcWord val = ctx.indeterminate == SmcSort::Object ? alg.object(v) : alg.arrow(v);
    auto at = [&](const SmcWord& w) { return alg.subst(w, val); };
    for (const auto* by_k : {&g.objects, &g.arrows}) {
      for_each_graded(*by_k, 2, max, [&](const auto& w) {
        ++r.checked;
        const SmcWord t = at(alg.tensor(*w[0], *w[1]));
        if (!t.letters.empty() || t != alg.tensor(at(*w[0]), at(*w[1]))) {
          r.fail("substitution does not preserve tensor at " + show(*w[0]) + ", " + show(*w[1]));
        }
      });
    }
    for_each_graded(g.arrows, 1, max, [&](const auto& w) {
      ++r.checked;
      if (at(alg.dom(*w[0])) != alg.dom(at(*w[0])) || at(alg.cod(*w[0])) != alg.cod(at(*w[0]))) {
        r.fail("substitution does not preserve dom/cod at " + show(*w[0]));
      }
    });
    for (const auto& level : pairs) {
      for (const auto& [gg, f] : level) {
        ++r.checked;
        const auto inner = alg.comp(at(gg), at(f));
        if (!inner || *inner != at(*alg.comp(gg, f))) {
          r.fail("substitution does not preserve composition at " + show(gg) + " . " + show(f));
        }
      }
    }
  }
}

}  // namespace

PropertyResult smc_axioms(const theories::FiniteStrictMonCat& c, std::size_t max_letters) {
  PropertyResult r{"smc-axioms"};
  const nf::SmcAlgebra alg(c);
  check_smc_context(alg, kObjectContext, max_letters, r);
  check_smc_context(alg, kArrowContext, max_letters, r);
  return r;
}

PropertyResult arr_preservation(const theories::FiniteStrictMonCat& c, std::size_t max_length) {
  PropertyResult r{"arr-preservation"};
  const theories::FiniteMonoid arr = theories::ob_arr(c, theories::Part::Arr);
  const nf::SmcAlgebra smc(c);
  const nf::MonoidAlgebra mon(arr);
  const auto smc_engine =
      nf::make_engine(nf::EngineKind::SmcObject, {theories::DataKind::StrMonCat, c});
  const auto mon_engine = nf::make_engine(nf::EngineKind::Monoid, {theories::DataKind::Monoid, arr});
  const phl::OpId tensor = *smc_engine->signature().find_op("tensor_A");
  const phl::OpId mul = *mon_engine->signature().find_op("mul");

  auto phi = [](const SmcWord& w) { return MonoidNF{w.consts}; };
  auto show = [&](const SmcWord& w) { return "[" + smc.format(w) + "]"; };

  // a word with k letters has 2k + 1 tokens
  const std::size_t max_letters = max_length == 0 ? 0 : (max_length - 1) / 2;
  std::vector<SmcWord> words;
  for (std::size_t k = 0; k <= max_letters; ++k) {
    auto ws = smc_words(c, SmcSort::Arrow, kObjectContext.arrow_letters, k);
    words.insert(words.end(), ws.begin(), ws.end());
  }

  ++r.checked;
  if (phi(smc.unit(SmcSort::Arrow)) != mon.unit()) r.fail("unit not preserved");

  std::set<MonoidNF> image;
  for (const SmcWord& w : words) {
    ++r.checked;
    if (!image.insert(phi(w)).second) r.fail("not injective at " + show(w));
  }
  for (std::size_t k = 0; k <= max_letters; ++k) {
    for_each_tuple(k + 1, arr.size(), [&](const std::vector<Elem>& parts) {
      ++r.checked;
      if (!image.count(MonoidNF{parts})) r.fail("not surjective: missing " + mon.format(MonoidNF{parts}));
    });
  }

  for (const SmcWord& u : words) {
    for (const SmcWord& v : words) {
      if (u.letters.size() + v.letters.size() > max_letters) continue;
      ++r.checked;
      const MonoidNF want = mon.mul(phi(u), phi(v));
      if (phi(smc.tensor(u, v)) != want) {
        r.fail("algebra: phi(u (x) v) != phi(u) phi(v) at " + show(u) + ", " + show(v));
        continue;
      }
      const Term st = Term::apply(tensor, {smc_engine->to_term(u), smc_engine->to_term(v)});
      const Term mt = Term::apply(mul, {mon_engine->to_term(phi(u)), mon_engine->to_term(phi(v))});
      const auto s_nf = smc_engine->reduce(st);
      const auto m_nf = mon_engine->reduce(mt);
      if (!s_nf || !m_nf || phi(std::get<SmcWord>(*s_nf)) != std::get<MonoidNF>(*m_nf) ||
          std::get<MonoidNF>(*m_nf) != want) {
        r.fail("rewriting: phi(u (x) v) != phi(u) phi(v) at " + show(u) + ", " + show(v));
      }
    }
  }
  return r;
}

PropertyResult presheaf_separation(const theories::PresheafData& p) {
  PropertyResult r{"presheaf-separation"};
  const nf::PresheafAlgebra alg(p);
  const auto& j = p.category;

  for (Elem i = 0; i < static_cast<Elem>(j.object_count()); ++i) {
    // N = M + J(i, -): an element of N_k is (false, m) or (true, arrow i -> k)
    using NElem = std::pair<bool, Elem>;
    auto act = [&](Elem f, NElem n) -> NElem {
      if (!n.first) return {false, p.maps[static_cast<std::size_t>(f)][static_cast<std::size_t>(n.second)]};
      return {true, j.compose(f, n.second)};
    };
    std::vector<NElem> points;
    for (std::size_t m = 0; m < p.sets[static_cast<std::size_t>(i)].size(); ++m) {
      points.push_back({false, static_cast<Elem>(m)});
    }
    for (Elem f : j.hom(i, i)) points.push_back({true, f});
    auto eval = [&](const PresheafNF& u, NElem n) -> NElem {
      if (u.kind == PresheafNF::Kind::Const) return {false, u.value};
      return act(u.value, n);
    };

    for (Elem k = 0; k < static_cast<Elem>(j.object_count()); ++k) {
      std::vector<PresheafNF> nfs;
      for (std::size_t m = 0; m < p.sets[static_cast<std::size_t>(k)].size(); ++m) {
        nfs.push_back(alg.constant(k, static_cast<Elem>(m)));
      }
      for (Elem f : j.hom(i, k)) nfs.push_back({PresheafNF::Kind::Gen, k, f});

      for (const PresheafNF& u : nfs) {
        for (const PresheafNF& v : nfs) {
          ++r.checked;
          bool separated = false;
          for (const NElem& n : points) separated |= eval(u, n) != eval(v, n);
          if ((u == v) == separated) {
            r.fail("separation fails between " + alg.format(u) + " and " + alg.format(v));
          }
        }
        for (Elem f = 0; f < static_cast<Elem>(j.arrow_count()); ++f) {
          if (j.dom[static_cast<std::size_t>(f)] != k) continue;
          ++r.checked;
          const PresheafNF fu = alg.alpha(f, u);
          for (const NElem& n : points) {
            if (eval(fu, n) != act(f, eval(u, n))) {
              r.fail("alpha disagrees with evaluation at " + alg.format(u));
              break;
            }
          }
        }
      }
    }
  }
  return r;
}

namespace {

// sorts A, B; c : -> A, f : A x A -> A, g : A -> B
std::shared_ptr<const phl::Theory> two_sorted_theory() {
  auto t = std::make_shared<phl::Theory>();
  t->name = "two_sorted";
  const auto a = t->signature.add_sort("A");
  const auto b = t->signature.add_sort("B");
  t->signature.add_op("c", {}, a);
  t->signature.add_op("f", {a, a}, a);
  t->signature.add_op("g", {a}, b);
  return t;
}

// Plain tables for the random structures, indexed like PartialStructure.
struct Tables {
  std::size_t na = 0, nb = 0;
  Elem c = models::kUndefined;
  std::vector<Elem> f;  // na * na
  std::vector<Elem> g;  // na
};

models::PartialStructure realize(const std::shared_ptr<const phl::Theory>& th, const Tables& t,
                                 const std::string& name) {
  models::StructureBuilder b(th, name);
  for (std::size_t i = 0; i < t.na; ++i) b.add_element(phl::SortId{0}, "a" + std::to_string(i));
  for (std::size_t i = 0; i < t.nb; ++i) b.add_element(phl::SortId{1}, "b" + std::to_string(i));
  if (t.c != models::kUndefined) b.set(phl::OpId{0}, {}, t.c);
  for (std::size_t x = 0; x < t.na; ++x) {
    for (std::size_t y = 0; y < t.na; ++y) {
      const Elem v = t.f[x * t.na + y];
      if (v != models::kUndefined) b.set(phl::OpId{1}, {Elem(x), Elem(y)}, v);
    }
    if (t.g[x] != models::kUndefined) b.set(phl::OpId{2}, {Elem(x)}, t.g[x]);
  }
  return std::move(b).build();
}

// Does (ka, kb) : S -> T preserve every defined operation?
bool preserves(const Tables& s, const Tables& t, const std::vector<Elem>& ka, const std::vector<Elem>& kb) {
  if (s.c != models::kUndefined && t.c != ka[static_cast<std::size_t>(s.c)]) return false;
  for (std::size_t x = 0; x < s.na; ++x) {
    for (std::size_t y = 0; y < s.na; ++y) {
      const Elem v = s.f[x * s.na + y];
      if (v == models::kUndefined) continue;
      const auto tx = static_cast<std::size_t>(ka[x]);
      const auto ty = static_cast<std::size_t>(ka[y]);
      if (t.f[tx * t.na + ty] != ka[static_cast<std::size_t>(v)]) return false;
    }
    const Elem v = s.g[x];
    if (v != models::kUndefined && t.g[static_cast<std::size_t>(ka[x])] != kb[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

Tables random_tables(std::mt19937_64& rng, std::size_t na, std::size_t nb, double density) {
  std::bernoulli_distribution def(density);
  auto pick = [&](std::size_t n) { return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
  Tables t{na, nb, models::kUndefined, std::vector<Elem>(na * na, models::kUndefined),
           std::vector<Elem>(na, models::kUndefined)};
  if (def(rng)) t.c = pick(na);
  for (Elem& v : t.f) if (def(rng)) v = pick(na);
  for (Elem& v : t.g) if (def(rng)) v = pick(nb);
  return t;
}

// Image of s under bijections pa, pb.
Tables transport(const Tables& s, const std::vector<Elem>& pa, const std::vector<Elem>& pb) {
  Tables t{s.na, s.nb, models::kUndefined, std::vector<Elem>(s.na * s.na, models::kUndefined),
           std::vector<Elem>(s.na, models::kUndefined)};
  auto ua = [&](Elem e) { return pa[static_cast<std::size_t>(e)]; };
  if (s.c != models::kUndefined) t.c = ua(s.c);
  for (std::size_t x = 0; x < s.na; ++x) {
    for (std::size_t y = 0; y < s.na; ++y) {
      const Elem v = s.f[x * s.na + y];
      if (v != models::kUndefined) {
        t.f[static_cast<std::size_t>(ua(Elem(x))) * s.na + static_cast<std::size_t>(ua(Elem(y)))] = ua(v);
      }
    }
    if (s.g[x] != models::kUndefined) {
      t.g[static_cast<std::size_t>(ua(Elem(x)))] = pb[static_cast<std::size_t>(s.g[x])];
    }
  }
  return t;
}

// Defines up to `extra` rows that t leaves undefined; any bijection onto t
// stays a homomorphism.
void add_rows(std::mt19937_64& rng, Tables& t, std::size_t extra) {
  auto pick = [&](std::size_t n) { return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
  std::vector<Elem*> open;
  if (t.c == models::kUndefined) open.push_back(&t.c);
  for (Elem& v : t.f) if (v == models::kUndefined) open.push_back(&v);
  for (Elem& v : t.g) if (v == models::kUndefined) open.push_back(&v);
  std::shuffle(open.begin(), open.end(), rng);
  for (std::size_t i = 0; i < extra && i < open.size(); ++i) {
    Elem* slot = open[i];
    const bool on_b = slot >= t.g.data() && slot < t.g.data() + t.g.size();
    *slot = pick(on_b ? t.nb : t.na);
  }
}

std::vector<Elem> permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Elem> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Elem>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Exhaustive search for k : t -> s with k∘h = id, h∘k = id, and both maps
// preserving the operations.
bool has_inverse_hom(const Tables& s, const Tables& t, const std::vector<Elem>& ha,
                     const std::vector<Elem>& hb) {
  if (!preserves(s, t, ha, hb)) return false;
  if (s.na == 0 || s.nb == 0) return t.na == s.na && t.nb == s.nb;
  bool found = false;
  for_each_tuple(t.na, s.na, [&](const std::vector<Elem>& ka) {
    if (found) return;
    for (std::size_t x = 0; x < s.na; ++x) if (ka[static_cast<std::size_t>(ha[x])] != Elem(x)) return;
    for (std::size_t y = 0; y < t.na; ++y) if (ha[static_cast<std::size_t>(ka[y])] != Elem(y)) return;
    for_each_tuple(t.nb, s.nb, [&](const std::vector<Elem>& kb) {
      if (found) return;
      for (std::size_t x = 0; x < s.nb; ++x) if (kb[static_cast<std::size_t>(hb[x])] != Elem(x)) return;
      for (std::size_t y = 0; y < t.nb; ++y) if (hb[static_cast<std::size_t>(kb[y])] != Elem(y)) return;
      found = preserves(t, s, ka, kb);
    });
  });
  return found;
}

}  // namespace

PropertyResult iso_reflection(std::uint64_t seed, std::size_t count) {
  PropertyResult r{"iso-reflection"};
  std::mt19937_64 rng(seed);
  const auto theory = two_sorted_theory();
  std::uniform_int_distribution<std::size_t> size(1, 3);
  std::size_t isos = 0;

  for (std::size_t n = 0; n < count; ++n) {
    // a bijective homomorphism onto the transported structure, which on odd
    // rounds gains extra defined rows that h does not reflect
    const Tables src = random_tables(rng, size(rng), size(rng), 0.6);
    const std::vector<Elem> ha = permutation(rng, src.na);
    const std::vector<Elem> hb = permutation(rng, src.nb);
    Tables dst = transport(src, ha, hb);
    if (n % 2 == 1) add_rows(rng, dst, std::uniform_int_distribution<std::size_t>(1, 2)(rng));
    const std::string label = "#" + std::to_string(n);
    auto ms = std::make_shared<const models::PartialStructure>(realize(theory, src, "M" + label));
    auto ns = std::make_shared<const models::PartialStructure>(realize(theory, dst, "N" + label));
    const models::Homomorphism h{ms, ns, {ha, hb}};
    const bool expect = has_inverse_hom(src, dst, ha, hb);
    const bool got = models::check_homomorphism(h).cls == models::HomClass::Iso;
    isos += expect ? 1 : 0;
    ++r.checked;
    if (expect != got) {
      r.fail("structure " + label + ": oracle says " + (expect ? "iso" : "not iso") +
             ", check_homomorphism says " + (got ? "iso" : "not iso"));
    }
  }
  if (count >= 8 && (isos == 0 || isos == count)) {
    r.fail("degenerate sample: " + std::to_string(isos) + " of " + std::to_string(count) + " isomorphisms");
  }
  return r;
}

PropertyResult dual_strategy(const nf::TermEngine& engine, std::uint64_t seed, std::size_t count,
                             std::size_t max_size) {
  PropertyResult r{"dual-strategy:" + std::string(nf::to_string(engine.kind()))};
  std::mt19937_64 rng(seed);
  std::size_t defined = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Term t = engine.random_term(rng, max_size);
    ++r.checked;
    const Term a = engine.normalize(t, nf::Strategy::LeftmostInnermost);
    const Term b = engine.normalize(t, nf::Strategy::RightmostOutermost);
    if (a != b) {
      r.fail(engine.print(t) + ": leftmost-innermost gives " + engine.print(a) +
             ", rightmost-outermost gives " + engine.print(b));
      continue;
    }
    const auto nf = engine.read_off(a);
    const auto direct = engine.evaluate(t);
    if (nf.has_value() != direct.has_value()) {
      r.fail(engine.print(t) + ": definedness differs from direct evaluation");
      continue;
    }
    if (!nf) continue;
    ++defined;
    if (*nf != *direct) r.fail(engine.print(t) + ": normal form differs from direct evaluation");
    if (engine.to_term(*nf) != a) r.fail(engine.print(t) + ": normal term is not canonical");
  }
  if (count >= 10 && defined * 10 < count) {
    r.fail("only " + std::to_string(defined) + " of " + std::to_string(count) + " terms defined");
  }
  return r;
}

}  // namespace isolab::suite
