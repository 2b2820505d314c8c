#include "isolab/iso/isotropy.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "isolab/error.hpp"
#include "isolab/nf/algebra.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/theories/constructions.hpp"

namespace isolab::iso {

using nf::NormalForm;
using theories::Elem;

namespace {

std::size_t at(Elem e) { return static_cast<std::size_t>(e); }

/// Sort key for the enumeration order.
struct Keyed {
  std::size_t x_count;
  std::size_t length;
  std::vector<std::string> ids;
  NormalForm nf;
};

std::vector<NormalForm> ordered(std::vector<Keyed> v) {
  std::stable_sort(v.begin(), v.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.x_count, a.length, a.ids) < std::tie(b.x_count, b.length, b.ids);
  });
  std::vector<NormalForm> out;
  out.reserve(v.size());
  for (Keyed& k : v) out.push_back(std::move(k.nf));
  return out;
}

/// Calls fn on every tuple in {0..n-1}^k in lexicographic order.
template <class Fn>
void for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k, 0);
  if (n == 0 && k > 0) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && ++idx[i - 1] == n) idx[--i] = 0;
    if (i == 0) return;
  }
}

// ---- monoids ---------------------------------------------------------------------

class MonoidIso final : public IsotropyEngine {
 public:
  explicit MonoidIso(const theories::FiniteMonoid& m) : alg_(m) {
    sorts_ = {"M"};
    ops_ = {{"e", {}, 0}, {"mul", {0, 0}, 0}};
    context_names_ = {"M<y>"};
    std::vector<NormalForm> p;
    for (std::size_t a = 0; a < m.size(); ++a) p.push_back(alg_.constant(static_cast<Elem>(a)));
    p.push_back(alg_.generic());
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (static_cast<Elem>(a) == m.unit) continue;
      p.push_back(nf::MonoidNF{{static_cast<Elem>(a), m.unit}});
      p.push_back(nf::MonoidNF{{m.unit, static_cast<Elem>(a)}});
    }
    probes_ = {{p}};
  }

  NormalForm generic(std::size_t) const override { return alg_.generic(); }

  std::vector<NormalForm> candidates(std::size_t, const Bounds& b, bool unit_degree) const override {
    const auto& m = alg_.monoid();
    std::vector<Keyed> out;
    for (std::size_t k = unit_degree ? 1 : 0; k <= (unit_degree ? 1 : b.max_x) && k <= b.max_x; ++k) {
      for_each_tuple(m.size(), k + 1, [&](const std::vector<std::size_t>& idx) {
        nf::MonoidNF u;
        std::vector<std::string> ids;
        std::size_t len = k;
        for (std::size_t i : idx) {
          u.parts.push_back(static_cast<Elem>(i));
          ids.push_back(m.elements[i]);
          if (static_cast<Elem>(i) != m.unit) ++len;
        }
        if (len <= b.max_length) out.push_back({k, len, std::move(ids), u});
      });
    }
    return ordered(std::move(out));
  }

  std::int64_t degree(const NormalForm& u) const override {
    return static_cast<std::int64_t>(std::get<nf::MonoidNF>(u).x_count());
  }

  NormalForm substitute(const NormalForm& s, const NormalForm& v) const override {
    return alg_.subst(std::get<nf::MonoidNF>(s), std::get<nf::MonoidNF>(v));
  }

  std::optional<NormalForm> apply(std::size_t op, std::span<const NormalForm> args) const override {
    if (op == 0) return alg_.unit();
    return alg_.mul(std::get<nf::MonoidNF>(args[0]), std::get<nf::MonoidNF>(args[1]));
  }

  std::string format(const NormalForm& u) const override {
    return alg_.format(std::get<nf::MonoidNF>(u));
  }

 private:
  nf::MonoidAlgebra alg_;
};

class CMonoidIso final : public IsotropyEngine {
 public:
  explicit CMonoidIso(const theories::FiniteMonoid& m) : alg_(m) {
    sorts_ = {"M"};
    ops_ = {{"e", {}, 0}, {"mul", {0, 0}, 0}};
    context_names_ = {"M<y>"};
    std::vector<NormalForm> p;
    for (std::size_t a = 0; a < m.size(); ++a) p.push_back(alg_.constant(static_cast<Elem>(a)));
    for (std::size_t a = 0; a < m.size(); ++a) p.push_back(nf::CMonoidNF{static_cast<Elem>(a), 1});
    probes_ = {{p}};
  }

  NormalForm generic(std::size_t) const override { return alg_.generic(); }

  std::vector<NormalForm> candidates(std::size_t, const Bounds& b, bool unit_degree) const override {
    const auto& m = alg_.monoid();
    std::vector<Keyed> out;
    for (std::size_t k = unit_degree ? 1 : 0; k <= (unit_degree ? 1 : b.max_x) && k <= b.max_x; ++k) {
      for (std::size_t a = 0; a < m.size(); ++a) {
        const std::size_t len = k + (static_cast<Elem>(a) != m.unit ? 1 : 0);
        if (len > b.max_length) continue;
        out.push_back({k, len, {m.elements[a]},
                       nf::CMonoidNF{static_cast<Elem>(a), static_cast<std::uint32_t>(k)}});
      }
    }
    return ordered(std::move(out));
  }

  std::int64_t degree(const NormalForm& u) const override {
    return std::get<nf::CMonoidNF>(u).exponent;
  }

  NormalForm substitute(const NormalForm& s, const NormalForm& v) const override {
    return alg_.subst(std::get<nf::CMonoidNF>(s), std::get<nf::CMonoidNF>(v));
  }

  std::optional<NormalForm> apply(std::size_t op, std::span<const NormalForm> args) const override {
    if (op == 0) return alg_.unit();
    return alg_.mul(std::get<nf::CMonoidNF>(args[0]), std::get<nf::CMonoidNF>(args[1]));
  }

  std::string format(const NormalForm& u) const override {
    return alg_.format(std::get<nf::CMonoidNF>(u));
  }

 private:
  nf::CMonoidAlgebra alg_;
};

// ---- groups ----------------------------------------------------------------------

class GroupIso final : public IsotropyEngine {
 public:
  explicit GroupIso(const theories::FiniteGroup& g) : alg_(g) {
    sorts_ = {"G"};
    ops_ = {{"e", {}, 0}, {"mul", {0, 0}, 0}, {"inv", {0}, 0}};
    // Two fresh points: with a single one, x ↦ x⁻¹ commutes with the
    // product over any abelian group.
    context_names_ = {"G<y0,y1>"};
    const Elem e = g.unit();
    std::vector<NormalForm> p;
    for (std::size_t a = 0; a < g.size(); ++a) p.push_back(alg_.constant(static_cast<Elem>(a)));
    for (std::uint8_t gen : {0, 1}) {
      p.push_back(alg_.generator(gen));
      for (std::size_t a = 0; a < g.size(); ++a) {
        if (static_cast<Elem>(a) == e) continue;
        p.push_back(nf::GroupNF{static_cast<Elem>(a), {{gen, 1, e}}});
        p.push_back(nf::GroupNF{e, {{gen, 1, static_cast<Elem>(a)}}});
      }
    }
    probes_ = {{p}};
  }

  NormalForm generic(std::size_t) const override { return alg_.generic(); }

  std::vector<NormalForm> candidates(std::size_t, const Bounds& b, bool unit_degree) const override {
    const auto& g = alg_.group();
    const std::size_t n = g.size();
    std::vector<Keyed> out;
    // Exponent sequences with total weight ≤ max_x.
    std::vector<std::vector<std::int32_t>> shapes{{}};
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      std::size_t w = 0;
      for (std::int32_t k : shapes[i]) w += static_cast<std::size_t>(std::abs(k));
      for (std::int32_t k = -static_cast<std::int32_t>(b.max_x); k <= static_cast<std::int32_t>(b.max_x); ++k) {
        if (k == 0 || w + static_cast<std::size_t>(std::abs(k)) > b.max_x) continue;
        auto next = shapes[i];
        next.push_back(k);
        shapes.push_back(std::move(next));
      }
    }
    for (const auto& shape : shapes) {
      std::size_t weight = 0;
      std::int64_t sum = 0;
      for (std::int32_t k : shape) {
        weight += static_cast<std::size_t>(std::abs(k));
        sum += k;
      }
      if (unit_degree && std::abs(sum) != 1) continue;
      const std::size_t r = shape.size();
      for_each_tuple(n, r + 1, [&](const std::vector<std::size_t>& idx) {
        nf::GroupNF u{static_cast<Elem>(idx[0]), {}};
        std::vector<std::string> ids{g.monoid.elements[idx[0]]};
        std::size_t len = weight + (u.head != g.unit() ? 1 : 0);
        for (std::size_t i = 0; i < r; ++i) {
          const Elem after = static_cast<Elem>(idx[i + 1]);
          // Consecutive powers of x merge across a unit.
          if (i + 1 < r && after == g.unit()) return;
          u.syllables.push_back({0, shape[i], after});
          ids.push_back(std::to_string(shape[i]));
          ids.push_back(g.monoid.elements[idx[i + 1]]);
          if (after != g.unit()) ++len;
        }
        if (len <= b.max_length) out.push_back({weight, len, std::move(ids), u});
      });
    }
    return ordered(std::move(out));
  }

  std::int64_t degree(const NormalForm& u) const override {
    return alg_.degree(std::get<nf::GroupNF>(u));
  }

  NormalForm substitute(const NormalForm& s, const NormalForm& v) const override {
    return alg_.subst(std::get<nf::GroupNF>(s), std::get<nf::GroupNF>(v));
  }

  std::optional<NormalForm> apply(std::size_t op, std::span<const NormalForm> args) const override {
    if (op == 0) return alg_.unit();
    if (op == 1) return alg_.mul(std::get<nf::GroupNF>(args[0]), std::get<nf::GroupNF>(args[1]));
    return alg_.inv(std::get<nf::GroupNF>(args[0]));
  }

  std::string format(const NormalForm& u) const override {
    return alg_.format(std::get<nf::GroupNF>(u));
  }

 private:
  nf::GroupAlgebra alg_;
};

// ---- strict monoidal categories ----------------------------------------------------

class SmcIso final : public IsotropyEngine {
  enum Op : std::size_t { Dom, Cod, Id, Comp, TensorO, TensorA, UnitO, UnitA };

 public:
  explicit SmcIso(const theories::FiniteStrictMonCat& c) : alg_(c) {
    using nf::SmcLetter;
    using nf::SmcSort;
    sorts_ = {"O", "A"};
    ops_ = {{"dom", {1}, 0},          {"cod", {1}, 0},          {"id", {0}, 1},
            {"comp", {1, 1}, 1},      {"tensor_O", {0, 0}, 0},  {"tensor_A", {1, 1}, 1},
            {"I_O", {}, 0},           {"I_A", {}, 1}};
    context_names_ = {"C<y_O>", "C<y_A>"};
    const std::vector<std::vector<SmcLetter>> letters = {
        {SmcLetter::XO, SmcLetter::IdXO},
        {SmcLetter::DomXA, SmcLetter::CodXA, SmcLetter::XA, SmcLetter::IdDomXA,
         SmcLetter::IdCodXA}};
    for (const auto& ctx : letters) {
      std::vector<std::vector<NormalForm>> per_sort(2);
      for (std::size_t a = 0; a < c.cat.object_count(); ++a) {
        per_sort[0].push_back(alg_.object(static_cast<Elem>(a)));
      }
      for (std::size_t f = 0; f < c.cat.arrow_count(); ++f) {
        per_sort[1].push_back(alg_.arrow(static_cast<Elem>(f)));
      }
      for (SmcLetter l : ctx) {
        const bool obj = nf::letter_sort(l) == SmcSort::Object;
        const std::size_t n = obj ? c.cat.object_count() : c.cat.arrow_count();
        const Elem unit = obj ? c.unit_ob : c.unit_arr;
        auto& out = per_sort[obj ? 0 : 1];
        out.push_back(alg_.letter(l));
        for (std::size_t a = 0; a < n; ++a) {
          if (static_cast<Elem>(a) == unit) continue;
          out.push_back(nf::SmcWord{obj ? SmcSort::Object : SmcSort::Arrow,
                                    {static_cast<Elem>(a), unit}, {l}});
          out.push_back(nf::SmcWord{obj ? SmcSort::Object : SmcSort::Arrow,
                                    {unit, static_cast<Elem>(a)}, {l}});
        }
      }
      probes_.push_back(std::move(per_sort));
    }
  }

  NormalForm generic(std::size_t sort) const override {
    return alg_.letter(sort == 0 ? nf::SmcLetter::XO : nf::SmcLetter::XA);
  }

  std::vector<NormalForm> candidates(std::size_t sort, const Bounds& b, bool unit_degree) const override {
    using nf::SmcLetter;
    const auto& c = alg_.category();
    const bool obj = sort == 0;
    const std::size_t n = obj ? c.cat.object_count() : c.cat.arrow_count();
    const auto& names = obj ? c.cat.objects : c.cat.arrows;
    const Elem unit = obj ? c.unit_ob : c.unit_arr;
    const std::vector<SmcLetter> alphabet =
        obj ? std::vector<SmcLetter>{SmcLetter::XO}
            : std::vector<SmcLetter>{SmcLetter::XA, SmcLetter::IdDomXA, SmcLetter::IdCodXA};
    std::vector<Keyed> out;
    for (std::size_t k = unit_degree ? 1 : 0; k <= (unit_degree ? 1 : b.max_x) && k <= b.max_x; ++k) {
      for_each_tuple(alphabet.size(), k, [&](const std::vector<std::size_t>& lidx) {
        for_each_tuple(n, k + 1, [&](const std::vector<std::size_t>& cidx) {
          nf::SmcWord w{obj ? nf::SmcSort::Object : nf::SmcSort::Arrow, {}, {}};
          std::vector<std::string> ids;
          std::size_t len = k;
          for (std::size_t i = 0; i <= k; ++i) {
            w.consts.push_back(static_cast<Elem>(cidx[i]));
            ids.push_back(names[cidx[i]]);
            if (static_cast<Elem>(cidx[i]) != unit) ++len;
            if (i < k) {
              w.letters.push_back(alphabet[lidx[i]]);
              ids.push_back(nf::SmcAlgebra::letter_name(alphabet[lidx[i]]));
            }
          }
          if (len <= b.max_length) out.push_back({k, len, std::move(ids), w});
        });
      });
    }
    return ordered(std::move(out));
  }

  std::int64_t degree(const NormalForm& u) const override {
    return static_cast<std::int64_t>(std::get<nf::SmcWord>(u).letters.size());
  }

  NormalForm substitute(const NormalForm& s, const NormalForm& v) const override {
    return alg_.subst(std::get<nf::SmcWord>(s), std::get<nf::SmcWord>(v));
  }

  std::optional<NormalForm> apply(std::size_t op, std::span<const NormalForm> args) const override {
    auto w = [&](std::size_t i) -> const nf::SmcWord& { return std::get<nf::SmcWord>(args[i]); };
    switch (op) {
      case Dom: return alg_.dom(w(0));
      case Cod: return alg_.cod(w(0));
      case Id: return alg_.id(w(0));
      case Comp: {
        auto r = alg_.comp(w(0), w(1));
        if (!r) return std::nullopt;
        return *r;
      }
      case TensorO:
      case TensorA: return alg_.tensor(w(0), w(1));
      case UnitO: return alg_.unit(nf::SmcSort::Object);
      case UnitA: return alg_.unit(nf::SmcSort::Arrow);
    }
    throw InvariantViolation("unknown operation");
  }

  std::string format(const NormalForm& u) const override {
    return alg_.format(std::get<nf::SmcWord>(u));
  }

 private:
  nf::SmcAlgebra alg_;
};

// ---- presheaves ------------------------------------------------------------------

class PresheafIso final : public IsotropyEngine {
 public:
  explicit PresheafIso(const theories::PresheafData& p) : alg_(p) {
    const auto& j = p.category;
    for (std::size_t i = 0; i < j.object_count(); ++i) {
      sorts_.push_back(theories::presheaf_sort_name(j, static_cast<Elem>(i)));
    }
    for (std::size_t f = 0; f < j.arrow_count(); ++f) {
      ops_.push_back({theories::presheaf_op_name(j, static_cast<Elem>(f)), {at(j.dom[f])},
                      at(j.cod[f])});
    }
    // M⟨y_i⟩ is finite: constants plus f(y_i) for every f out of i.
    for (std::size_t i = 0; i < j.object_count(); ++i) {
      context_names_.push_back("M<y_" + j.objects[i] + ">");
      std::vector<std::vector<NormalForm>> per_sort(j.object_count());
      for (std::size_t k = 0; k < j.object_count(); ++k) {
        for (std::size_t a = 0; a < p.sets[k].size(); ++a) {
          per_sort[k].push_back(alg_.constant(static_cast<Elem>(k), static_cast<Elem>(a)));
        }
      }
      for (std::size_t f = 0; f < j.arrow_count(); ++f) {
        if (at(j.dom[f]) != i) continue;
        per_sort[at(j.cod[f])].push_back(
            nf::PresheafNF{nf::PresheafNF::Kind::Gen, j.cod[f], static_cast<Elem>(f)});
      }
      probes_.push_back(std::move(per_sort));
    }
  }

  NormalForm generic(std::size_t sort) const override {
    return alg_.generic(static_cast<Elem>(sort));
  }

  std::vector<NormalForm> candidates(std::size_t sort, const Bounds& b, bool unit_degree) const override {
    const auto& p = alg_.data();
    const auto& j = p.category;
    const Elem i = static_cast<Elem>(sort);
    std::vector<Keyed> out;
    if (!unit_degree && b.max_length >= 1) {
      for (std::size_t a = 0; a < p.sets[sort].size(); ++a) {
        out.push_back({0, 1, {p.sets[sort][a]}, alg_.constant(i, static_cast<Elem>(a))});
      }
    }
    if (b.max_x >= 1 && b.max_length >= 1) {
      for (Elem f : j.hom(i, i)) {
        out.push_back({1, j.is_identity(f) ? 1u : 2u, {j.arrows[at(f)]},
                       nf::PresheafNF{nf::PresheafNF::Kind::Gen, i, f}});
      }
    }
    return ordered(std::move(out));
  }

  std::int64_t degree(const NormalForm& u) const override {
    return std::get<nf::PresheafNF>(u).kind == nf::PresheafNF::Kind::Gen ? 1 : 0;
  }

  NormalForm substitute(const NormalForm& s, const NormalForm& v) const override {
    return alg_.subst(std::get<nf::PresheafNF>(s), std::get<nf::PresheafNF>(v));
  }

  std::optional<NormalForm> apply(std::size_t op, std::span<const NormalForm> args) const override {
    return alg_.alpha(static_cast<Elem>(op), std::get<nf::PresheafNF>(args[0]));
  }

  std::string format(const NormalForm& u) const override {
    return alg_.format(std::get<nf::PresheafNF>(u));
  }

 private:
  nf::PresheafAlgebra alg_;
};

// ---- checks ----------------------------------------------------------------------

struct Failure {
  std::string condition;
  std::string witness;
};

/// Generic commutation with, and definedness reflection of, one operation,
/// over every probe tuple of every context.
std::optional<Failure> check_op(const IsotropyEngine& e, std::size_t op, const Family& s) {
  const OpInfo& info = e.ops()[op];
  const std::size_t n = info.args.size();
  for (std::size_t ctx = 0; ctx < e.context_count(); ++ctx) {
    std::vector<const std::vector<NormalForm>*> pools(n);
    std::vector<std::vector<NormalForm>> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      pools[i] = &e.probes(ctx, info.args[i]);
      for (const NormalForm& v : *pools[i]) images[i].push_back(e.substitute(s[info.args[i]], v));
    }
    std::vector<std::size_t> idx(n, 0);
    bool empty = false;
    for (const auto* p : pools) empty = empty || p->empty();
    if (empty) continue;
    std::vector<NormalForm> v(n), sv(n);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = (*pools[i])[idx[i]];
        sv[i] = images[i][idx[i]];
      }
      const auto fv = e.apply(op, v);
      const auto rhs = e.apply(op, sv);
      auto witness = [&](const std::string& tail) {
        std::string w = e.context_name(ctx) + ": " + info.name + "(";
        for (std::size_t i = 0; i < n; ++i) w += (i > 0 ? ", " : "") + e.format(v[i]);
        return w + ")" + tail;
      };
      if (fv) {
        if (!rhs) {
          return Failure{"commutes generically with " + info.name,
                         witness(" is defined but its image is not")};
        }
        const NormalForm lhs = e.substitute(s[info.result], *fv);
        if (lhs != *rhs) {
          return Failure{"commutes generically with " + info.name,
                         witness(": s[f(v)] = " + e.format(lhs) + " but f(s[v]) = " + e.format(*rhs))};
        }
      } else if (rhs) {
        return Failure{"reflects definedness of " + info.name,
                       witness(" is undefined but f(s[v]) = " + e.format(*rhs))};
      }
      std::size_t i = n;
      while (i > 0 && ++idx[i - 1] == pools[i - 1]->size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  return std::nullopt;
}

bool has_inverse(const IsotropyEngine& e, std::size_t sort, const NormalForm& s,
                 const std::vector<NormalForm>& pool) {
  const NormalForm x = e.generic(sort);
  for (const NormalForm& t : pool) {
    if (e.substitute(t, s) == x && e.substitute(s, t) == x) return true;
  }
  return false;
}

std::vector<std::size_t> ops_by_arity(const IsotropyEngine& e) {
  std::vector<std::size_t> order(e.ops().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return e.ops()[a].args.size() < e.ops()[b].args.size();
  });
  return order;
}

std::size_t thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ISOLAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = std::min(n, static_cast<std::size_t>(v));
  }
  return n;
}

/// keep[i] = pred(i), evaluated on up to thread_count() threads.
template <class Pred>
std::vector<char> parallel_filter(std::size_t count, Pred&& pred) {
  std::vector<char> keep(count, 0);
  const std::size_t threads = std::min(thread_count(), std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) keep[i] = pred(i) ? 1 : 0;
    return keep;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) keep[i] = pred(i) ? 1 : 0;
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return keep;
}

}  // namespace

std::string IsotropyEngine::format(const Family& f) const {
  if (f.size() == 1) return format(f.front());
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += (i > 0 ? "; " : "") + sorts_[i] + ": " + format(f[i]);
  }
  return out;
}

std::unique_ptr<IsotropyEngine> make_isotropy_engine(const theories::TaggedData& data) {
  using theories::DataKind;
  switch (data.kind) {
    case DataKind::Monoid:
      return std::make_unique<MonoidIso>(std::get<theories::FiniteMonoid>(data.value));
    case DataKind::CMonoid:
      return std::make_unique<CMonoidIso>(std::get<theories::FiniteMonoid>(data.value));
    case DataKind::Group:
      return std::make_unique<GroupIso>(std::get<theories::FiniteGroup>(data.value));
    case DataKind::StrMonCat:
      return std::make_unique<SmcIso>(std::get<theories::FiniteStrictMonCat>(data.value));
    case DataKind::Presheaf:
    case DataKind::MSet:
      return std::make_unique<PresheafIso>(std::get<theories::PresheafData>(data.value));
    default:
      throw Error("no normal-form engine for " + std::string(theories::to_string(data.kind)) +
                  "; only the closed form is available");
  }
}

DefInnReport check_definable_inner(const IsotropyEngine& engine, const Family& candidate,
                                   const Bounds& inverse_search) {
  if (candidate.size() != engine.sorts().size()) {
    throw Error("candidate needs one normal form per sort");
  }
  for (std::size_t op : ops_by_arity(engine)) {
    if (auto f = check_op(engine, op, candidate)) return {false, f->condition, f->witness};
  }
  for (std::size_t s = 0; s < candidate.size(); ++s) {
    const auto pool = engine.candidates(s, inverse_search, true);
    if (!has_inverse(engine, s, candidate[s], pool)) {
      return {false, "invertible",
              "no inverse for " + engine.format(candidate[s]) + " within bounds (" +
                  std::to_string(inverse_search.max_x) + ", " +
                  std::to_string(inverse_search.max_length) + ")"};
    }
  }
  return {};
}

IsotropyResult brute_force_isotropy(const IsotropyEngine& engine, const Bounds& bounds) {
  if (bounds.max_x < 1 || bounds.max_length < 1) throw Error("bounds must be positive");
  const std::size_t sorts = engine.sorts().size();
  const std::vector<std::size_t> order = ops_by_arity(engine);
  IsotropyResult result;

  Family generic;
  for (std::size_t s = 0; s < sorts; ++s) generic.push_back(engine.generic(s));

  // Per sort: operations within that sort, then an inverse.
  std::vector<std::vector<NormalForm>> survivors(sorts);
  std::vector<bool> local(engine.ops().size(), false);
  for (std::size_t s = 0; s < sorts; ++s) {
    std::vector<std::size_t> own;
    for (std::size_t op : order) {
      const OpInfo& info = engine.ops()[op];
      if (info.result == s &&
          std::all_of(info.args.begin(), info.args.end(), [&](std::size_t a) { return a == s; })) {
        own.push_back(op);
        local[op] = true;
      }
    }
    const std::vector<NormalForm> pool = engine.candidates(s, bounds, true);
    result.candidates += pool.size();
    const auto keep = parallel_filter(pool.size(), [&](std::size_t i) {
      Family f = generic;
      f[s] = pool[i];
      for (std::size_t op : own) {
        if (check_op(engine, op, f)) return false;
      }
      return has_inverse(engine, s, pool[i], pool);
    });
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (keep[i]) survivors[s].push_back(pool[i]);
    }
  }

  // Families across sorts against the remaining operations.
  std::vector<Family> families;
  bool empty = false;
  for (const auto& v : survivors) empty = empty || v.empty();
  if (!empty) {
    std::vector<std::size_t> idx(sorts, 0);
    for (;;) {
      Family f(sorts);
      for (std::size_t s = 0; s < sorts; ++s) f[s] = survivors[s][idx[s]];
      families.push_back(std::move(f));
      std::size_t i = sorts;
      while (i > 0 && ++idx[i - 1] == survivors[i - 1].size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  const auto keep = parallel_filter(families.size(), [&](std::size_t i) {
    for (std::size_t op : order) {
      if (!local[op] && check_op(engine, op, families[i])) return false;
    }
    return true;
  });
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (keep[i]) result.elements.push_back(families[i]);
  }

  auto id_it = std::find(result.elements.begin(), result.elements.end(), generic);
  if (id_it == result.elements.end()) {
    throw InvariantViolation("the identity family failed the DefInn checks");
  }
  std::rotate(result.elements.begin(), id_it, id_it + 1);

  const std::size_t n = result.elements.size();
  std::map<Family, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(result.elements[i], i);
  std::vector<std::size_t> table;
  table.reserve(n * n);
  for (const Family& t : result.elements) {
    for (const Family& s : result.elements) {
      Family ts(sorts);
      for (std::size_t c = 0; c < sorts; ++c) ts[c] = engine.substitute(t[c], s[c]);
      auto it = index.find(ts);
      if (it == index.end()) {
        result.escapes.push_back(engine.format(ts));
        table.push_back(0);
      } else {
        table.push_back(it->second);
      }
    }
  }
  if (result.escapes.empty()) {
    std::vector<std::string> labels;
    for (const Family& f : result.elements) labels.push_back(engine.format(f));
    result.group.emplace(std::move(labels), std::move(table));
  }
  return result;
}

GroupTable closed_form_isotropy(const theories::TaggedData& data) {
  using theories::DataKind;
  switch (data.kind) {
    case DataKind::Monoid:
      return inv_elements(std::get<theories::FiniteMonoid>(data.value));
    case DataKind::Group:
      return GroupTable::from_group(std::get<theories::FiniteGroup>(data.value));
    case DataKind::CMonoid:
    case DataKind::SymStrMonCat:
      return GroupTable::trivial();
    case DataKind::StrMonCat:
      return picard(std::get<theories::FiniteStrictMonCat>(data.value));
    case DataKind::Presheaf: {
      const auto& j = std::get<theories::PresheafData>(data.value).category;
      return rigid(j) ? GroupTable::trivial() : center_auts(j);
    }
    case DataKind::MSet: {
      const auto& j = std::get<theories::PresheafData>(data.value).category;
      return inv_elements(theories::center(endo_monoid(j, 0)));
    }
    case DataKind::CrossedModule:
      return GroupTable::from_group(std::get<theories::CrossedModule>(data.value).g);
    case DataKind::Category:
      break;
  }
  throw Error("no closed form for " + std::string(theories::to_string(data.kind)));
}

Family theta(const theories::FiniteStrictMonCat& c, Elem a) {
  const theories::FiniteMonoid ob = theories::ob_arr(c, theories::Part::Ob);
  const auto b = ob.inverse(a);
  if (!b) throw Error("object " + c.cat.objects[at(a)] + " is not invertible");
  return {nf::SmcWord{nf::SmcSort::Object, {a, *b}, {nf::SmcLetter::XO}},
          nf::SmcWord{nf::SmcSort::Arrow, {c.cat.id[at(a)], c.cat.id[at(*b)]},
                      {nf::SmcLetter::XA}}};
}

Elem sigma(const theories::FiniteStrictMonCat& c, const Family& e) {
  const auto* w = e.empty() ? nullptr : std::get_if<nf::SmcWord>(&e[0]);
  if (w == nullptr || w->letters != std::vector<nf::SmcLetter>{nf::SmcLetter::XO}) {
    throw Error("object component is not of the form a ⊗ x_O ⊗ b");
  }
  const Elem a = w->consts[0];
  const Elem b = w->consts[1];
  if (c.tensor_o(a, b) != c.unit_ob || c.tensor_o(b, a) != c.unit_ob) {
    throw Error("object component a ⊗ x_O ⊗ b has b ≠ a⁻¹");
  }
  return a;
}

}  // namespace isolab::iso
