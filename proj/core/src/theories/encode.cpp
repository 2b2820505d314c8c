#include "isolab/theories/encode.hpp"

#include "isolab/error.hpp"

namespace isolab::theories {

using models::PartialStructure;
using models::StructureBuilder;
using phl::OpId;
using phl::SortId;

namespace {

SortId sort_of(const phl::Signature& sig, std::string_view name) {
  auto s = sig.find_sort(name);
  if (!s) throw InvariantViolation("theory has no sort '" + std::string(name) + "'");
  return *s;
}

OpId op_of(const phl::Signature& sig, std::string_view name) {
  auto f = sig.find_op(name);
  if (!f) throw InvariantViolation("theory has no operation '" + std::string(name) + "'");
  return *f;
}

void add_carrier(StructureBuilder& b, SortId s, const std::vector<std::string>& ids) {
  for (const std::string& id : ids) b.add_element(s, id);
}

void add_binary(StructureBuilder& b, OpId f, std::size_t n,
                const std::vector<Elem>& table) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem r = table[x * n + y];
      if (r != kUndefined) b.set(f, {static_cast<Elem>(x), static_cast<Elem>(y)}, r);
    }
  }
}

std::vector<std::string> carrier(const PartialStructure& m, SortId s) {
  auto c = m.carrier(s);
  return {c.begin(), c.end()};
}

Elem constant(const PartialStructure& m, std::string_view op) {
  const Elem r = m.apply(op_of(m.signature(), op), {});
  if (r == kUndefined) {
    throw InvariantViolation("constant '" + std::string(op) + "' is undefined");
  }
  return r;
}

std::vector<Elem> unary(const PartialStructure& m, std::string_view op, SortId s,
                        bool total) {
  const OpId f = op_of(m.signature(), op);
  std::vector<Elem> out;
  for (std::size_t x = 0; x < m.carrier_size(s); ++x) {
    const Elem arg = static_cast<Elem>(x);
    const Elem r = m.apply(f, std::span<const Elem>(&arg, 1));
    if (total && r == kUndefined) {
      throw InvariantViolation("'" + std::string(op) + "' is undefined at " +
                               m.element_id(s, arg));
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Elem> binary(const PartialStructure& m, std::string_view op, SortId s,
                         bool total) {
  const OpId f = op_of(m.signature(), op);
  const std::size_t n = m.carrier_size(s);
  std::vector<Elem> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem args[2] = {static_cast<Elem>(x), static_cast<Elem>(y)};
      const Elem r = m.apply(f, args);
      if (total && r == kUndefined) {
        throw InvariantViolation("'" + std::string(op) + "' is undefined at (" +
                                 m.element_id(s, args[0]) + ", " +
                                 m.element_id(s, args[1]) + ")");
      }
      out.push_back(r);
    }
  }
  return out;
}

void add_category(StructureBuilder& b, const phl::Signature& sig,
                  const FiniteCategory& c) {
  const SortId o = sort_of(sig, "O");
  const SortId a = sort_of(sig, "A");
  add_carrier(b, o, c.objects);
  add_carrier(b, a, c.arrows);
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    b.set(op_of(sig, "dom"), {static_cast<Elem>(f)}, c.dom[f]);
    b.set(op_of(sig, "cod"), {static_cast<Elem>(f)}, c.cod[f]);
  }
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    b.set(op_of(sig, "id"), {static_cast<Elem>(i)}, c.id[i]);
  }
  add_binary(b, op_of(sig, "comp"), c.arrow_count(), c.comp);
}

FiniteCategory read_category(const PartialStructure& m) {
  const phl::Signature& sig = m.signature();
  const SortId o = sort_of(sig, "O");
  const SortId a = sort_of(sig, "A");
  FiniteCategory c;
  c.name = m.name();
  c.objects = carrier(m, o);
  c.arrows = carrier(m, a);
  c.dom = unary(m, "dom", a, true);
  c.cod = unary(m, "cod", a, true);
  c.id = unary(m, "id", o, true);
  c.comp = binary(m, "comp", a, false);
  return c;
}

}  // namespace

PartialStructure encode(const FiniteMonoid& m, TheoryKind kind) {
  if (kind != TheoryKind::Monoid && kind != TheoryKind::CMonoid) {
    throw Error("a monoid encodes into the monoid or cmonoid theory");
  }
  m.validate();
  if (kind == TheoryKind::CMonoid && !m.commutative()) {
    throw InvariantViolation("monoid '" + m.name + "' is not commutative");
  }
  auto th = build_theory(kind);
  const phl::Signature& sig = th->signature;
  StructureBuilder b(th, m.name);
  add_carrier(b, sort_of(sig, "M"), m.elements);
  b.set(op_of(sig, "e"), {}, m.unit);
  add_binary(b, op_of(sig, "mul"), m.size(), m.table);
  return std::move(b).build();
}

PartialStructure encode(const FiniteGroup& g) {
  g.validate();
  auto th = build_theory(TheoryKind::Group);
  const phl::Signature& sig = th->signature;
  StructureBuilder b(th, g.name());
  add_carrier(b, sort_of(sig, "M"), g.monoid.elements);
  b.set(op_of(sig, "e"), {}, g.unit());
  add_binary(b, op_of(sig, "mul"), g.size(), g.monoid.table);
  for (std::size_t x = 0; x < g.size(); ++x) {
    b.set(op_of(sig, "inv"), {static_cast<Elem>(x)}, g.inv[x]);
  }
  return std::move(b).build();
}

PartialStructure encode(const FiniteCategory& c) {
  c.validate();
  auto th = build_theory(TheoryKind::Category);
  StructureBuilder b(th, c.name);
  add_category(b, th->signature, c);
  return std::move(b).build();
}

PartialStructure encode(const FiniteStrictMonCat& c) {
  c.validate();
  auto th = build_theory(TheoryKind::StrMonCat);
  const phl::Signature& sig = th->signature;
  StructureBuilder b(th, c.name());
  add_category(b, sig, c.cat);
  add_binary(b, op_of(sig, "tensor_O"), c.cat.object_count(), c.tensor_ob);
  add_binary(b, op_of(sig, "tensor_A"), c.cat.arrow_count(), c.tensor_arr);
  b.set(op_of(sig, "I_O"), {}, c.unit_ob);
  b.set(op_of(sig, "I_A"), {}, c.unit_arr);
  return std::move(b).build();
}

PartialStructure encode(const PresheafData& p) {
  p.validate();
  auto th = build_presheaf_theory(p.category);
  const phl::Signature& sig = th->signature;
  const FiniteCategory& j = p.category;
  StructureBuilder b(th, p.name);
  for (std::size_t i = 0; i < j.object_count(); ++i) {
    add_carrier(b, sort_of(sig, presheaf_sort_name(j, static_cast<Elem>(i))), p.sets[i]);
  }
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    const OpId op = op_of(sig, presheaf_op_name(j, static_cast<Elem>(f)));
    for (std::size_t x = 0; x < p.maps[f].size(); ++x) {
      b.set(op, {static_cast<Elem>(x)}, p.maps[f][x]);
    }
  }
  return std::move(b).build();
}

FiniteMonoid decode_monoid(const PartialStructure& m) {
  const phl::Signature& sig = m.signature();
  const SortId s = sort_of(sig, "M");
  FiniteMonoid out{m.name(), carrier(m, s), constant(m, "e"), binary(m, "mul", s, true)};
  out.validate();
  return out;
}

FiniteGroup decode_group(const PartialStructure& m) {
  FiniteGroup g{decode_monoid(m), unary(m, "inv", sort_of(m.signature(), "M"), true)};
  g.validate();
  return g;
}

FiniteCategory decode_category(const PartialStructure& m) {
  FiniteCategory c = read_category(m);
  c.validate();
  return c;
}

FiniteStrictMonCat decode_strmoncat(const PartialStructure& m) {
  const phl::Signature& sig = m.signature();
  FiniteStrictMonCat c;
  c.cat = read_category(m);
  c.tensor_ob = binary(m, "tensor_O", sort_of(sig, "O"), true);
  c.tensor_arr = binary(m, "tensor_A", sort_of(sig, "A"), true);
  c.unit_ob = constant(m, "I_O");
  c.unit_arr = constant(m, "I_A");
  c.validate();
  return c;
}

PresheafData decode_presheaf(const PartialStructure& m, const FiniteCategory& j) {
  const phl::Signature& sig = m.signature();
  PresheafData p;
  p.name = m.name();
  p.category = j;
  for (std::size_t i = 0; i < j.object_count(); ++i) {
    p.sets.push_back(carrier(m, sort_of(sig, presheaf_sort_name(j, static_cast<Elem>(i)))));
  }
  for (std::size_t f = 0; f < j.arrow_count(); ++f) {
    const SortId src = sort_of(sig, presheaf_sort_name(j, j.dom[f]));
    p.maps.push_back(unary(m, presheaf_op_name(j, static_cast<Elem>(f)), src, true));
  }
  p.validate();
  return p;
}

}  // namespace isolab::theories
