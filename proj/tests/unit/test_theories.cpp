#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>

#include "isolab/error.hpp"
#include "isolab/models/semantics.hpp"
#include "isolab/theories/builtin.hpp"
#include "isolab/theories/constructions.hpp"
#include "isolab/theories/encode.hpp"
#include "isolab/theories/json_io.hpp"

using namespace isolab;
using namespace isolab::theories;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> data_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(fs::path(ISOLAB_FIXTURES) / "data")) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Builtin, TheoryShapes) {
  const auto m = build_theory(TheoryKind::Monoid);
  EXPECT_EQ(m->signature.sort_count(), 1u);
  EXPECT_EQ(m->signature.op_count(), 2u);
  EXPECT_EQ(m->axioms.size(), 5u);
  EXPECT_EQ(build_theory(TheoryKind::StrMonCat)->axioms.size(), 17u);
  EXPECT_EQ(build_theory(TheoryKind::Monoid), build_theory(TheoryKind::Monoid));
  EXPECT_EQ(parse_theory_kind("smc"), TheoryKind::StrMonCat);
  EXPECT_FALSE(parse_theory_kind("ring").has_value());
}

TEST(Builtin, PresheafTheoryOverBZ2) {
  // arrows {0, 1}: 2 totality axioms, 1 identity axiom, and one composition
  // axiom for each of the 4 composable pairs
  const auto j = classifying_category(cyclic_group(2).monoid);
  const auto t = build_presheaf_theory(j);
  EXPECT_EQ(t->signature.sort_count(), 1u);
  EXPECT_EQ(t->signature.op_count(), 2u);
  EXPECT_EQ(t->axioms.size(), 7u);

  // chain(3): 6 arrows, 3 objects, composable pairs = sum over middle objects
  const auto c = chain(3);
  std::size_t pairs = 0;
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    for (std::size_t f = 0; f < c.arrow_count(); ++f) pairs += c.dom[g] == c.cod[f];
  }
  EXPECT_EQ(build_presheaf_theory(c)->axioms.size(), c.arrow_count() + c.object_count() + pairs);
}

TEST(Constructions, DeltaNablaShapes) {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  const auto d = delta_nabla(z2, Variant::Discrete);
  const auto n = delta_nabla(z2, Variant::Indiscrete);
  EXPECT_EQ(d.cat.object_count(), 2u);
  EXPECT_EQ(d.cat.arrow_count(), 2u);
  EXPECT_EQ(n.cat.object_count(), 2u);
  EXPECT_EQ(n.cat.arrow_count(), 4u);
}

TEST(Constructions, ObjectsOfDeltaNablaAreTheMonoid) {
  std::vector<FiniteMonoid> ms = enumerate_monoids(3);
  ms.push_back(full_transformation2());
  ms.push_back(symmetric_group3().monoid);
  for (const FiniteMonoid& m : ms) {
    for (auto v : {Variant::Discrete, Variant::Indiscrete}) {
      FiniteMonoid ob = ob_arr(delta_nabla(m, v), Part::Ob);
      ob.name = m.name;
      EXPECT_EQ(ob, m) << m.name;
    }
  }
}

TEST(Constructions, ArrowsOfNablaZ2) {
  // tabulate ⊗ on the four arrows a->b and compare with Z2 x Z2 via the
  // endpoints
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  const auto n = delta_nabla(z2, Variant::Indiscrete);
  const FiniteMonoid arr = ob_arr(n, Part::Arr);
  ASSERT_EQ(arr.size(), 4u);
  const FiniteMonoid sq = product(z2, z2);
  EXPECT_TRUE(monoids_isomorphic(arr, sq));
  for (Elem f = 0; f < 4; ++f) {
    for (Elem g = 0; g < 4; ++g) {
      const Elem fg = arr.mul(f, g);
      const auto& c = n.cat;
      EXPECT_EQ(c.dom[fg], (c.dom[f] + c.dom[g]) % 2);
      EXPECT_EQ(c.cod[fg], (c.cod[f] + c.cod[g]) % 2);
    }
  }
  // discrete: arrows are the identities, so Arr ≅ M
  EXPECT_TRUE(monoids_isomorphic(ob_arr(delta_nabla(z2, Variant::Discrete), Part::Arr), z2));
}

TEST(Constructions, MonoidCounts) {
  // monoids of order 1..4 up to isomorphism
  EXPECT_EQ(enumerate_monoids(1).size(), 1u);
  EXPECT_EQ(enumerate_monoids(2).size(), 2u);
  EXPECT_EQ(enumerate_monoids(3).size(), 7u);
  EXPECT_EQ(enumerate_monoids(4).size(), 35u);
  for (const FiniteMonoid& m : enumerate_monoids(3)) EXPECT_NO_THROW(m.validate());
}

TEST(Constructions, SmallMonoids) {
  const FiniteMonoid sl = semilattice2();
  EXPECT_TRUE(sl.commutative());
  EXPECT_FALSE(sl.inverse(*sl.find("a")).has_value());
  const FiniteMonoid t2 = full_transformation2();
  EXPECT_FALSE(t2.commutative());
  EXPECT_EQ(center(t2).size(), 1u);
  const FiniteMonoid z = with_zero(cyclic_group(2).monoid);
  EXPECT_EQ(z.size(), 3u);
  const Elem zero = *z.find("z");
  for (Elem a = 0; a < 3; ++a) EXPECT_EQ(z.mul(a, zero), zero);
  const FiniteGroup s3 = symmetric_group3();
  EXPECT_EQ(s3.size(), 6u);
  // (p·q)(i) = p(q(i))
  const Elem p = *s3.monoid.find("102");
  const Elem q = *s3.monoid.find("021");
  EXPECT_EQ(s3.monoid.elements[s3.mul(p, q)], "120");
}

TEST(Constructions, ThinMonoidal) {
  const auto c = thin_monoidal(cyclic_group(4).monoid, {0, 2}, "thin");
  EXPECT_EQ(c.cat.object_count(), 4u);
  EXPECT_EQ(c.cat.arrow_count(), 8u);  // a -> a and a -> a+2
  EXPECT_FALSE(c.commutative() && c.cat.arrow_count() == 4u);
  // a constant map is not reachable from the identity map by itself
  const FiniteMonoid t2 = full_transformation2();
  EXPECT_THROW(thin_monoidal(t2, {*t2.find("00")}, "bad"), InvariantViolation);
}

TEST(Data, ValidationWitnesses) {
  FiniteMonoid m = cyclic_group(3).monoid;
  m.table[1 * 3 + 2] = 1;
  EXPECT_THROW(m.validate(), InvariantViolation);
  EXPECT_THROW(FiniteGroup::from_monoid(semilattice2()), InvariantViolation);

  CrossedModule x;
  x.a = cyclic_group(2);
  x.g = cyclic_group(4);
  x.boundary = {0, 1};  // 1 + 1 = 0 in Z2 but 1 + 1 = 2 in Z4
  x.action = std::vector<Elem>(8);
  for (Elem g = 0; g < 4; ++g) for (Elem a = 0; a < 2; ++a) x.action[g * 2 + a] = a;
  EXPECT_THROW(x.validate(), InvariantViolation);
  x.boundary = {0, 2};
  EXPECT_NO_THROW(x.validate());
}

TEST(Encode, RoundTrips) {
  const FiniteMonoid z2 = cyclic_group(2).monoid;
  EXPECT_EQ(encode(z2).carrier_size(phl::SortId{0}), 2u);
  EXPECT_EQ(decode_monoid(encode(z2)), z2);
  const FiniteGroup s3 = symmetric_group3();
  EXPECT_EQ(decode_group(encode(s3)), s3);
  const auto d3 = delta_nabla(cyclic_group(3).monoid, Variant::Discrete);
  EXPECT_EQ(decode_strmoncat(encode(d3)), d3);
  const auto pp = parallel_pair();
  EXPECT_EQ(decode_category(encode(pp)), pp);
}

TEST(Encode, SwapPresheaf) {
  const FiniteCategory bz2 = classifying_category(cyclic_group(2).monoid);
  const PresheafData p{"swap", bz2, {{"p", "q"}}, {{0, 1}, {1, 0}}};
  const auto m = encode(p);
  const auto op = *m.signature().find_op(presheaf_op_name(bz2, 1));
  EXPECT_EQ(m.apply(op, std::vector<Elem>{0}), 1);
  EXPECT_EQ(m.apply(op, std::vector<Elem>{1}), 0);
  EXPECT_EQ(decode_presheaf(m, bz2), p);
}

TEST(Encode, FixtureRoundTrips) {
  std::size_t seen = 0;
  for (const fs::path& path : data_files()) {
    SCOPED_TRACE(path.string());
    const TaggedData d = load_data_file(path);
    ++seen;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FiniteMonoid>) {
            const auto k = d.kind == DataKind::CMonoid ? TheoryKind::CMonoid : TheoryKind::Monoid;
            const auto m = encode(v, k);
            EXPECT_TRUE(models::check_model(m).ok());
            EXPECT_EQ(decode_monoid(m), v);
          } else if constexpr (std::is_same_v<T, FiniteGroup>) {
            EXPECT_EQ(decode_group(encode(v)), v);
          } else if constexpr (std::is_same_v<T, FiniteStrictMonCat>) {
            const auto m = encode(v);
            EXPECT_TRUE(models::check_model(m).ok());
            EXPECT_EQ(decode_strmoncat(m), v);
          } else if constexpr (std::is_same_v<T, PresheafData>) {
            const auto m = encode(v);
            EXPECT_TRUE(models::check_model(m).ok());
            EXPECT_EQ(decode_presheaf(m, v.category), v);
          } else if constexpr (std::is_same_v<T, CrossedModule>) {
            EXPECT_NO_THROW(v.validate());
          }
        },
        d.value);
  }
  EXPECT_GE(seen, 30u);
}

TEST(Json, Kinds) {
  using nlohmann::json;
  EXPECT_EQ(read_data(json{{"kind", "group"}, {"construction", "cyclic"}, {"order", 5}}).kind,
            DataKind::Group);
  EXPECT_THROW(read_data(json{{"kind", "ring"}}), ParseError);
  EXPECT_THROW(read_data(json{{"kind", "cmonoid"}, {"construction", "transformation2"}}),
               InvariantViolation);
  EXPECT_THROW(read_data(json{{"kind", "monoid"}, {"elements", {"e", "a"}}, {"unit", "e"},
                              {"table", json::array({json::array({"e", "a"})})}}),
               ParseError);
  const json explicit_monoid{{"kind", "monoid"},
                             {"name", "SL2"},
                             {"elements", {"e", "a"}},
                             {"unit", "e"},
                             {"table", json::array({json::array({"e", "a"}), json::array({"a", "a"})})}};
  const auto d = read_data(explicit_monoid);
  const auto& m = std::get<FiniteMonoid>(d.value);
  EXPECT_TRUE(monoids_isomorphic(m, semilattice2()));
  EXPECT_EQ(read_monoid(to_json(m)), m);
  const FiniteCategory pp = parallel_pair();
  EXPECT_EQ(read_category(to_json(pp)), pp);
}

TEST(Json, MissingFile) { EXPECT_THROW(load_data_file("/nonexistent/x.json"), Error); }
