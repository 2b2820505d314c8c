#include <charconv>
#include <sstream>

#include "isolab/error.hpp"
#include "isolab/nf/algebra.hpp"
#include "isolab/nf/rewrite.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/theories/encode.hpp"

namespace isolab::nf {

using phl::OpId;
using phl::SortId;
using phl::Term;

namespace {

std::optional<std::int32_t> parse_int(std::string_view s) {
  std::int32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// ---- monoid, commutative monoid, group ------------------------------------------

/// Shared machinery for the single-sorted engines over mul/e.
class WordEngine : public TermEngine {
 protected:
  WordEngine(EngineKind kind, const models::PartialStructure& model,
             const theories::FiniteMonoid& m)
      : TermEngine(kind, model, {SortId{0}}), m_(m), mul_(op("mul")), e_(op("e")) {
    add_rule("e.const", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, e_)) return std::nullopt;
      return constant(0, m_.unit);
    });
    add_monoid_rules("mul", mul_, 0, m_.unit,
                     [this](Elem a, Elem b) { return m_.mul(a, b); });
  }

  /// Atoms of a normal product as word tokens; throws on anything that is
  /// not a constant, x, or (for groups) inv(x).
  std::vector<WordToken> tokens_of(const Term& normal) const {
    std::vector<Term> atoms;
    flatten(mul_, normal, atoms);
    std::vector<WordToken> out;
    for (const Term& a : atoms) {
      if (auto c = as_constant(a)) {
        out.push_back({false, c->second, 0, 0});
      } else if (a == x()) {
        out.push_back({true, 0, 0, 1});
      } else if (inv_ && is_op(a, *inv_) && a.args()[0] == x()) {
        out.push_back({true, 0, 0, -1});
      } else {
        throw InvariantViolation("not a normal word: " + print(normal));
      }
    }
    return out;
  }

  Term word_term(const std::vector<WordToken>& tokens) const {
    std::vector<Term> atoms;
    for (const WordToken& t : tokens) {
      if (!t.is_gen) {
        if (t.elem != m_.unit) atoms.push_back(constant(0, t.elem));
        continue;
      }
      if (t.gen != 0) throw Error("only the indeterminate x has a term");
      const Term a = t.exponent > 0 ? x() : Term::apply(*inv_, {x()});
      for (std::int32_t k = 0; k < std::abs(t.exponent); ++k) atoms.push_back(a);
    }
    return chain(mul_, std::move(atoms), constant(0, m_.unit));
  }

 public:
  Term parse(std::string_view text) const override {
    if (text.find('(') != std::string_view::npos) return TermEngine::parse(text);
    std::vector<Term> atoms;
    std::istringstream in{std::string(text)};
    std::string tok;
    int col = 1;
    while (in >> tok) {
      col = static_cast<int>(in.tellg() == -1 ? text.size() : static_cast<std::size_t>(in.tellg())) -
            static_cast<int>(tok.size()) + 1;
      std::int32_t power = 0;
      if (tok == "x") {
        power = 1;
      } else if (tok == "x⁻¹") {
        power = -1;
      } else if (tok.rfind("x^", 0) == 0) {
        auto k = parse_int(std::string_view(tok).substr(2));
        if (!k) throw ParseError("bad exponent in '" + tok + "'", 1, col);
        power = *k;
      } else if (auto a = m_.find(tok)) {
        atoms.push_back(constant(0, *a));
        continue;
      } else if (tok == "e") {
        atoms.push_back(Term::apply(e_));
        continue;
      } else {
        throw ParseError("unknown word token '" + tok + "'", 1, col);
      }
      if (power < 0 && !inv_) throw ParseError("negative powers need the group engine", 1, col);
      const Term a = power > 0 ? x() : Term::apply(*inv_, {x()});
      for (std::int32_t k = 0; k < std::abs(power); ++k) atoms.push_back(a);
    }
    if (atoms.empty()) throw ParseError("empty word", 1, 1);
    Term r = atoms.back();
    for (std::size_t i = atoms.size() - 1; i-- > 0;) r = Term::apply(mul_, {atoms[i], r});
    return r;
  }

 protected:
  theories::FiniteMonoid m_;
  OpId mul_;
  OpId e_;
  std::optional<OpId> inv_;
};

class MonoidEngine final : public WordEngine {
 public:
  explicit MonoidEngine(const theories::FiniteMonoid& m)
      : WordEngine(EngineKind::Monoid, theories::encode(m), m), alg_(m) {}

  std::optional<NormalForm> read_off(const Term& t) const override {
    return alg_.normalize(tokens_of(t));
  }

  std::optional<NormalForm> evaluate(const Term& t) const override { return eval(t); }

  Term to_term(const NormalForm& nf) const override {
    const auto& u = std::get<MonoidNF>(nf);
    std::vector<WordToken> w;
    for (std::size_t i = 0; i < u.parts.size(); ++i) {
      if (i > 0) w.push_back({true, 0, 0, 1});
      w.push_back({false, u.parts[i], 0, 0});
    }
    return word_term(w);
  }

  std::string format(const NormalForm& nf) const override {
    return alg_.format(std::get<MonoidNF>(nf));
  }

 private:
  MonoidNF eval(const Term& t) const {
    if (auto c = as_constant(t)) return alg_.constant(c->second);
    if (t == x()) return alg_.generic();
    if (is_op(t, e_)) return alg_.unit();
    if (is_op(t, mul_)) return alg_.mul(eval(t.args()[0]), eval(t.args()[1]));
    throw InvariantViolation("unexpected term " + print(t));
  }

  MonoidAlgebra alg_;
};

class CMonoidEngine final : public WordEngine {
 public:
  explicit CMonoidEngine(const theories::FiniteMonoid& m)
      : WordEngine(EngineKind::CMonoid, theories::encode(m, theories::TheoryKind::CMonoid), m),
        alg_(m) {
    add_rule("mul.commute", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, mul_) || t.args()[0] != x() || !as_constant(t.args()[1])) return std::nullopt;
      return Term::apply(mul_, {t.args()[1], t.args()[0]});
    });
    add_rule("mul.commute-assoc", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, mul_) || t.args()[0] != x() || !is_op(t.args()[1], mul_)) return std::nullopt;
      const Term& r = t.args()[1];
      if (!as_constant(r.args()[0])) return std::nullopt;
      return Term::apply(mul_, {r.args()[0], Term::apply(mul_, {x(), r.args()[1]})});
    });
  }

  std::optional<NormalForm> read_off(const Term& t) const override {
    return alg_.normalize(tokens_of(t));
  }

  std::optional<NormalForm> evaluate(const Term& t) const override { return eval(t); }

  Term to_term(const NormalForm& nf) const override {
    const auto& u = std::get<CMonoidNF>(nf);
    return word_term({{false, u.coeff, 0, 0},
                      {true, 0, 0, static_cast<std::int32_t>(u.exponent)}});
  }

  std::string format(const NormalForm& nf) const override {
    return alg_.format(std::get<CMonoidNF>(nf));
  }

 private:
  CMonoidNF eval(const Term& t) const {
    if (auto c = as_constant(t)) return alg_.constant(c->second);
    if (t == x()) return alg_.generic();
    if (is_op(t, e_)) return alg_.unit();
    if (is_op(t, mul_)) return alg_.mul(eval(t.args()[0]), eval(t.args()[1]));
    throw InvariantViolation("unexpected term " + print(t));
  }

  CMonoidAlgebra alg_;
};

class GroupEngine final : public WordEngine {
 public:
  explicit GroupEngine(const theories::FiniteGroup& g)
      : WordEngine(EngineKind::Group, theories::encode(g), g.monoid), g_(g), alg_(g) {
    inv_ = op("inv");
    const OpId inv = *inv_;
    add_rule("inv.const", [this, inv](const Term& t) -> std::optional<Term> {
      if (!is_op(t, inv)) return std::nullopt;
      auto a = as_constant(t.args()[0]);
      if (!a) return std::nullopt;
      return constant(0, g_.inv[static_cast<std::size_t>(a->second)]);
    });
    add_rule("inv.inv", [this, inv](const Term& t) -> std::optional<Term> {
      if (!is_op(t, inv) || !is_op(t.args()[0], inv)) return std::nullopt;
      return t.args()[0].args()[0];
    });
    add_rule("inv.mul", [this, inv](const Term& t) -> std::optional<Term> {
      if (!is_op(t, inv) || !is_op(t.args()[0], mul_)) return std::nullopt;
      const Term& p = t.args()[0];
      return Term::apply(mul_, {Term::apply(inv, {p.args()[1]}), Term::apply(inv, {p.args()[0]})});
    });
    // s·s⁻¹ and s⁻¹·s, bare and at the head of a product.
    auto inverse_pair = [this, inv](const Term& a, const Term& b) {
      return (is_op(b, inv) && b.args()[0] == a) || (is_op(a, inv) && a.args()[0] == b);
    };
    add_rule("mul.cancel", [this, inverse_pair](const Term& t) -> std::optional<Term> {
      if (!is_op(t, mul_) || !inverse_pair(t.args()[0], t.args()[1])) return std::nullopt;
      return constant(0, m_.unit);
    });
    add_rule("mul.cancel-assoc", [this, inverse_pair](const Term& t) -> std::optional<Term> {
      if (!is_op(t, mul_) || !is_op(t.args()[1], mul_)) return std::nullopt;
      const Term& r = t.args()[1];
      if (!inverse_pair(t.args()[0], r.args()[0])) return std::nullopt;
      return r.args()[1];
    });
  }

  std::optional<NormalForm> read_off(const Term& t) const override {
    return alg_.normalize(tokens_of(t));
  }

  std::optional<NormalForm> evaluate(const Term& t) const override { return eval(t); }

  Term to_term(const NormalForm& nf) const override {
    return word_term(alg_.tokens(std::get<GroupNF>(nf)));
  }

  std::string format(const NormalForm& nf) const override {
    return alg_.format(std::get<GroupNF>(nf));
  }

 private:
  GroupNF eval(const Term& t) const {
    if (auto c = as_constant(t)) return alg_.constant(c->second);
    if (t == x()) return alg_.generic();
    if (is_op(t, e_)) return alg_.unit();
    if (is_op(t, mul_)) return alg_.mul(eval(t.args()[0]), eval(t.args()[1]));
    if (is_op(t, *inv_)) return alg_.inv(eval(t.args()[0]));
    throw InvariantViolation("unexpected term " + print(t));
  }

  theories::FiniteGroup g_;
  GroupAlgebra alg_;
};

// ---- strict monoidal categories ----------------------------------------------------

SortId sort_named(const models::PartialStructure& m, std::string_view name) {
  auto s = m.signature().find_sort(name);
  if (!s) throw InvariantViolation("theory lacks sort " + std::string(name));
  return *s;
}

class SmcEngine final : public TermEngine {
 public:
  SmcEngine(const theories::FiniteStrictMonCat& c, SmcSort indeterminate)
      : SmcEngine(theories::encode(c), c, indeterminate) {}

  std::optional<NormalForm> read_off(const Term& t) const override {
    if (auto w = as_word(t)) return *w;
    if (!contains(t, comp_)) throw InvariantViolation("not a normal word: " + print(t));
    return std::nullopt;
  }

  std::optional<NormalForm> evaluate(const Term& t) const override {
    if (auto w = eval(t)) return *w;
    return std::nullopt;
  }

  Term to_term(const NormalForm& nf) const override {
    const auto& w = std::get<SmcWord>(nf);
    const bool obj = w.sort == SmcSort::Object;
    const Elem unit = obj ? cat().unit_ob : cat().unit_arr;
    const std::size_t sort = obj ? o_ : a_;
    std::vector<Term> atoms;
    for (std::size_t i = 0; i < w.consts.size(); ++i) {
      if (i > 0) atoms.push_back(letter_term(w.letters[i - 1]));
      if (w.consts[i] != unit) atoms.push_back(constant(sort, w.consts[i]));
    }
    return chain(obj ? tensor_o_ : tensor_a_, std::move(atoms), constant(sort, unit));
  }

  std::string format(const NormalForm& nf) const override {
    return alg_.format(std::get<SmcWord>(nf));
  }

 protected:
  std::optional<Term> random_hook(std::mt19937_64& rng, SortId sort,
                                  std::size_t budget) const override {
    // Most random composites are undefined; wrap some arrows in identities
    // so that the composition rule also fires.
    if (phl::index(sort) != a_ || budget < 5 || !std::bernoulli_distribution(0.25)(rng)) {
      return std::nullopt;
    }
    const Term t = random_of_sort(rng, sort, (budget - 3) / 2);
    if (std::bernoulli_distribution(0.5)(rng)) {
      return Term::apply(comp_, {Term::apply(id_, {Term::apply(cod_, {t})}), t});
    }
    return Term::apply(comp_, {t, Term::apply(id_, {Term::apply(dom_, {t})})});
  }

 private:
  SmcEngine(const models::PartialStructure& model, const theories::FiniteStrictMonCat& c,
            SmcSort indeterminate)
      : TermEngine(indeterminate == SmcSort::Object ? EngineKind::SmcObject : EngineKind::SmcArrow,
                   model, {sort_named(model, indeterminate == SmcSort::Object ? "O" : "A")}),
        alg_(c),
        indet_(indeterminate),
        o_(phl::index(sort_named(model, "O"))),
        a_(phl::index(sort_named(model, "A"))),
        dom_(op("dom")),
        cod_(op("cod")),
        id_(op("id")),
        comp_(op("comp")),
        tensor_o_(op("tensor_O")),
        tensor_a_(op("tensor_A")),
        unit_o_(op("I_O")),
        unit_a_(op("I_A")) {
    add_rule("I_O.const", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, unit_o_)) return std::nullopt;
      return constant(o_, cat().unit_ob);
    });
    add_rule("I_A.const", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, unit_a_)) return std::nullopt;
      return constant(a_, cat().unit_arr);
    });
    add_monoid_rules("tensor_O", tensor_o_, o_, cat().unit_ob,
                     [this](Elem a, Elem b) { return cat().tensor_o(a, b); });
    add_monoid_rules("tensor_A", tensor_a_, a_, cat().unit_arr,
                     [this](Elem f, Elem g) { return cat().tensor_a(f, g); });
    for (const bool is_dom : {true, false}) {
      const OpId end = is_dom ? dom_ : cod_;
      const std::string name = is_dom ? "dom" : "cod";
      add_rule(name + ".const", [this, end, is_dom](const Term& t) -> std::optional<Term> {
        if (!is_op(t, end)) return std::nullopt;
        auto f = as_constant(t.args()[0]);
        if (!f) return std::nullopt;
        const auto& arrows_end = is_dom ? cat().cat.dom : cat().cat.cod;
        return constant(o_, arrows_end[static_cast<std::size_t>(f->second)]);
      });
      add_rule(name + ".tensor", [this, end](const Term& t) -> std::optional<Term> {
        if (!is_op(t, end) || !is_op(t.args()[0], tensor_a_)) return std::nullopt;
        const Term& p = t.args()[0];
        return Term::apply(tensor_o_, {Term::apply(end, {p.args()[0]}),
                                       Term::apply(end, {p.args()[1]})});
      });
      add_rule(name + ".id", [this, end](const Term& t) -> std::optional<Term> {
        if (!is_op(t, end) || !is_op(t.args()[0], id_)) return std::nullopt;
        return t.args()[0].args()[0];
      });
    }
    add_rule("id.const", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, id_)) return std::nullopt;
      auto a = as_constant(t.args()[0]);
      if (!a) return std::nullopt;
      return constant(a_, cat().cat.id[static_cast<std::size_t>(a->second)]);
    });
    add_rule("id.tensor", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, id_) || !is_op(t.args()[0], tensor_o_)) return std::nullopt;
      const Term& p = t.args()[0];
      return Term::apply(tensor_a_, {Term::apply(id_, {p.args()[0]}),
                                     Term::apply(id_, {p.args()[1]})});
    });
    // Composition acts on words: when both sides are built from constants,
    // letters and tensors, compose letterwise if the boundaries agree and
    // stay stuck otherwise.
    add_rule("comp.words", [this](const Term& t) -> std::optional<Term> {
      if (!is_op(t, comp_)) return std::nullopt;
      auto g = as_word(t.args()[0]);
      auto f = g ? as_word(t.args()[1]) : std::nullopt;
      if (!f) return std::nullopt;
      auto gf = alg_.comp(*g, *f);
      if (!gf) return std::nullopt;
      return to_term(*gf);
    });
  }

  const theories::FiniteStrictMonCat& cat() const { return alg_.category(); }

  Term letter_term(SmcLetter l) const {
    switch (l) {
      case SmcLetter::XO:
      case SmcLetter::XA: return x();
      case SmcLetter::IdXO: return Term::apply(id_, {x()});
      case SmcLetter::DomXA: return Term::apply(dom_, {x()});
      case SmcLetter::CodXA: return Term::apply(cod_, {x()});
      case SmcLetter::IdDomXA: return Term::apply(id_, {Term::apply(dom_, {x()})});
      case SmcLetter::IdCodXA: return Term::apply(id_, {Term::apply(cod_, {x()})});
    }
    throw InvariantViolation("unknown letter");
  }

  std::optional<SmcLetter> as_letter(const Term& t) const {
    const bool on_o = indet_ == SmcSort::Object;
    if (t == x()) return on_o ? SmcLetter::XO : SmcLetter::XA;
    if (on_o) {
      if (is_op(t, id_) && t.args()[0] == x()) return SmcLetter::IdXO;
      return std::nullopt;
    }
    if (is_op(t, dom_) && t.args()[0] == x()) return SmcLetter::DomXA;
    if (is_op(t, cod_) && t.args()[0] == x()) return SmcLetter::CodXA;
    if (is_op(t, id_)) {
      const Term& a = t.args()[0];
      if (is_op(a, dom_) && a.args()[0] == x()) return SmcLetter::IdDomXA;
      if (is_op(a, cod_) && a.args()[0] == x()) return SmcLetter::IdCodXA;
    }
    return std::nullopt;
  }

  /// Words built from constants, letters and tensors only.
  std::optional<SmcWord> as_word(const Term& t) const {
    if (auto c = as_constant(t)) {
      return c->first == o_ ? alg_.object(c->second) : alg_.arrow(c->second);
    }
    if (auto l = as_letter(t)) return alg_.letter(*l);
    if (is_op(t, tensor_o_) || is_op(t, tensor_a_)) {
      auto u = as_word(t.args()[0]);
      auto v = u ? as_word(t.args()[1]) : std::nullopt;
      if (!v) return std::nullopt;
      return alg_.tensor(*u, *v);
    }
    return std::nullopt;
  }

  std::optional<SmcWord> eval(const Term& t) const {
    if (auto c = as_constant(t)) {
      return c->first == o_ ? alg_.object(c->second) : alg_.arrow(c->second);
    }
    if (t == x()) return alg_.letter(indet_ == SmcSort::Object ? SmcLetter::XO : SmcLetter::XA);
    if (is_op(t, unit_o_)) return alg_.unit(SmcSort::Object);
    if (is_op(t, unit_a_)) return alg_.unit(SmcSort::Arrow);
    std::vector<SmcWord> args;
    for (const Term& a : t.args()) {
      auto w = eval(a);
      if (!w) return std::nullopt;
      args.push_back(std::move(*w));
    }
    if (is_op(t, dom_)) return alg_.dom(args[0]);
    if (is_op(t, cod_)) return alg_.cod(args[0]);
    if (is_op(t, id_)) return alg_.id(args[0]);
    if (is_op(t, comp_)) return alg_.comp(args[0], args[1]);
    if (is_op(t, tensor_o_) || is_op(t, tensor_a_)) return alg_.tensor(args[0], args[1]);
    throw InvariantViolation("unexpected term " + print(t));
  }

  static bool contains(const Term& t, OpId o) {
    if (t.is_variable()) return false;
    if (t.op() == o) return true;
    for (const Term& a : t.args()) {
      if (contains(a, o)) return true;
    }
    return false;
  }

  SmcAlgebra alg_;
  SmcSort indet_;
  std::size_t o_, a_;
  OpId dom_, cod_, id_, comp_, tensor_o_, tensor_a_, unit_o_, unit_a_;
};

// ---- presheaves -------------------------------------------------------------------

class PresheafEngine final : public TermEngine {
 public:
  PresheafEngine(const theories::PresheafData& p, Elem object)
      : PresheafEngine(theories::encode(p), p, object) {}

  std::optional<NormalForm> read_off(const Term& t) const override {
    if (auto c = as_constant(t)) return alg_.constant(object_of_sort(c->first), c->second);
    if (t == x()) return alg_.generic(object_);
    if (auto f = arrow_of(t); f && t.args()[0] == x()) {
      return PresheafNF{PresheafNF::Kind::Gen, j().cod[static_cast<std::size_t>(*f)], *f};
    }
    throw InvariantViolation("not a normal term: " + print(t));
  }

  std::optional<NormalForm> evaluate(const Term& t) const override { return eval(t); }

  Term to_term(const NormalForm& nf) const override {
    const auto& u = std::get<PresheafNF>(nf);
    if (u.kind == PresheafNF::Kind::Const) return constant(sort_of_object(u.object), u.value);
    if (j().is_identity(u.value)) return x();
    return Term::apply(alpha_[static_cast<std::size_t>(u.value)], {x()});
  }

  std::string format(const NormalForm& nf) const override {
    return alg_.format(std::get<PresheafNF>(nf));
  }

 private:
  PresheafEngine(const models::PartialStructure& model, const theories::PresheafData& p,
                 Elem object)
      : TermEngine(EngineKind::Presheaf, model,
                   {sort_named(model, theories::presheaf_sort_name(p.category, object))}),
        alg_(p),
        object_(object) {
    for (std::size_t f = 0; f < j().arrow_count(); ++f) {
      alpha_.push_back(op(theories::presheaf_op_name(j(), static_cast<Elem>(f))));
    }
    for (std::size_t i = 0; i < j().object_count(); ++i) {
      sort_of_object_.push_back(phl::index(
          sort_named(model, theories::presheaf_sort_name(j(), static_cast<Elem>(i)))));
    }
    add_rule("alpha.const", [this](const Term& t) -> std::optional<Term> {
      auto f = arrow_of(t);
      if (!f) return std::nullopt;
      auto a = as_constant(t.args()[0]);
      if (!a) return std::nullopt;
      const Elem b = alg_.data().maps[static_cast<std::size_t>(*f)][static_cast<std::size_t>(a->second)];
      return constant(sort_of_object(j().cod[static_cast<std::size_t>(*f)]), b);
    });
    add_rule("alpha.comp", [this](const Term& t) -> std::optional<Term> {
      auto g = arrow_of(t);
      auto f = g ? arrow_of(t.args()[0]) : std::nullopt;
      if (!f) return std::nullopt;
      const Elem gf = j().compose(*g, *f);
      return Term::apply(alpha_[static_cast<std::size_t>(gf)], {t.args()[0].args()[0]});
    });
    add_rule("alpha.id", [this](const Term& t) -> std::optional<Term> {
      auto f = arrow_of(t);
      if (!f || !j().is_identity(*f)) return std::nullopt;
      return t.args()[0];
    });
  }

  const theories::FiniteCategory& j() const { return alg_.category(); }

  std::optional<Elem> arrow_of(const Term& t) const {
    if (t.is_variable()) return std::nullopt;
    for (std::size_t f = 0; f < alpha_.size(); ++f) {
      if (alpha_[f] == t.op()) return static_cast<Elem>(f);
    }
    return std::nullopt;
  }

  std::size_t sort_of_object(Elem i) const { return sort_of_object_[static_cast<std::size_t>(i)]; }

  Elem object_of_sort(std::size_t s) const {
    for (std::size_t i = 0; i < sort_of_object_.size(); ++i) {
      if (sort_of_object_[i] == s) return static_cast<Elem>(i);
    }
    throw InvariantViolation("sort is not an object sort");
  }

  PresheafNF eval(const Term& t) const {
    if (auto c = as_constant(t)) return alg_.constant(object_of_sort(c->first), c->second);
    if (t == x()) return alg_.generic(object_);
    if (auto f = arrow_of(t)) return alg_.alpha(*f, eval(t.args()[0]));
    throw InvariantViolation("unexpected term " + print(t));
  }

  PresheafAlgebra alg_;
  Elem object_;
  std::vector<OpId> alpha_;
  std::vector<std::size_t> sort_of_object_;
};

template <class T>
const T& expect(const theories::TaggedData& d, std::string_view what) {
  if (const T* v = std::get_if<T>(&d.value)) return *v;
  throw Error(std::string(what) + " engine cannot run on " +
              std::string(theories::to_string(d.kind)) + " data");
}

}  // namespace

std::unique_ptr<TermEngine> make_engine(EngineKind kind, const theories::TaggedData& data,
                                        std::optional<std::string> indeterminate_object) {
  switch (kind) {
    case EngineKind::Monoid:
      if (auto g = std::get_if<theories::FiniteGroup>(&data.value)) {
        return std::make_unique<MonoidEngine>(g->monoid);
      }
      return std::make_unique<MonoidEngine>(expect<theories::FiniteMonoid>(data, "monoid"));
    case EngineKind::CMonoid:
      return std::make_unique<CMonoidEngine>(expect<theories::FiniteMonoid>(data, "cmonoid"));
    case EngineKind::Group:
      if (auto m = std::get_if<theories::FiniteMonoid>(&data.value)) {
        return std::make_unique<GroupEngine>(theories::FiniteGroup::from_monoid(*m));
      }
      return std::make_unique<GroupEngine>(expect<theories::FiniteGroup>(data, "group"));
    case EngineKind::SmcObject:
    case EngineKind::SmcArrow:
      return std::make_unique<SmcEngine>(
          expect<theories::FiniteStrictMonCat>(data, "smc"),
          kind == EngineKind::SmcObject ? SmcSort::Object : SmcSort::Arrow);
    case EngineKind::Presheaf: {
      const auto& p = expect<theories::PresheafData>(data, "presheaf");
      Elem object = 0;
      if (indeterminate_object) {
        auto o = p.category.find_object(*indeterminate_object);
        if (!o) throw Error("category has no object '" + *indeterminate_object + "'");
        object = *o;
      }
      if (p.category.object_count() == 0) throw Error("presheaf over the empty category");
      return std::make_unique<PresheafEngine>(p, object);
    }
  }
  throw Error("unknown engine");
}

}  // namespace isolab::nf
