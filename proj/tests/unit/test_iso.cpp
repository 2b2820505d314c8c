#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "isolab/error.hpp"
#include "isolab/iso/isotropy.hpp"
#include "isolab/theories/constructions.hpp"

using namespace isolab;
using namespace isolab::iso;
using theories::DataKind;
using theories::TaggedData;

namespace {

TaggedData fixture(const std::string& rel) {
  return theories::load_data_file(std::filesystem::path(ISOLAB_FIXTURES) / "data" / rel);
}

GroupTable cyclic(std::size_t n) { return GroupTable::from_group(theories::cyclic_group(n)); }

bool same_group(const GroupTable& a, const GroupTable& b) {
  return group_isomorphism(a, b).has_value();
}

}  // namespace

TEST(GroupTable, Isomorphism) {
  const GroupTable z4 = cyclic(4);
  const GroupTable v4 = GroupTable::from_group(
      theories::product(theories::cyclic_group(2), theories::cyclic_group(2)));
  EXPECT_FALSE(group_isomorphism(z4, v4).has_value());
  EXPECT_TRUE(same_group(v4, v4));
  const auto phi = group_isomorphism(cyclic(6), GroupTable::from_group(theories::product(
                                                     theories::cyclic_group(2), theories::cyclic_group(3))));
  ASSERT_TRUE(phi.has_value());
  const GroupTable z6 = cyclic(6);
  const GroupTable z2z3 = GroupTable::from_group(
      theories::product(theories::cyclic_group(2), theories::cyclic_group(3)));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_EQ((*phi)[z6.mul(a, b)], z2z3.mul((*phi)[a], (*phi)[b]));
  EXPECT_FALSE(same_group(GroupTable::from_group(theories::symmetric_group3()), z6));
}

TEST(GroupTable, Describe) {
  EXPECT_EQ(describe_group(GroupTable::trivial()), "trivial");
  EXPECT_EQ(describe_group(cyclic(4)), "Z4");
  EXPECT_EQ(describe_group(GroupTable::from_group(theories::product(
                theories::cyclic_group(2), theories::cyclic_group(2)))),
            "Z2 x Z2");
  EXPECT_EQ(describe_group(GroupTable::from_group(theories::symmetric_group3())), "S3");
  EXPECT_THROW(GroupTable({"e", "a"}, {0, 1, 1, 1}), InvariantViolation);
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(inv_elements(theories::full_transformation2()).size(), 2u);
  EXPECT_EQ(inv_elements(theories::semilattice2()).size(), 1u);
  EXPECT_EQ(inv_elements(theories::with_zero(theories::cyclic_group(3).monoid)).size(), 3u);
  EXPECT_TRUE(same_group(center_auts(theories::classifying_category(theories::cyclic_group(3).monoid)),
                         cyclic(3)));
  // S3 has trivial center
  EXPECT_EQ(center_auts(theories::classifying_category(theories::symmetric_group3().monoid)).size(), 1u);
  EXPECT_EQ(center_auts(theories::chain(3)).size(), 1u);
  EXPECT_TRUE(rigid(theories::chain(3)));
  EXPECT_TRUE(rigid(theories::parallel_pair()));
  EXPECT_FALSE(rigid(theories::classifying_category(theories::cyclic_group(2).monoid)));

  const auto nabla = theories::delta_nabla(theories::cyclic_group(3).monoid,
                                           theories::Variant::Indiscrete);
  EXPECT_TRUE(same_group(picard(nabla), cyclic(3)));
}

TEST(ClosedForms, Dispatch) {
  EXPECT_TRUE(same_group(closed_form_isotropy(fixture("z4.json")), cyclic(4)));
  EXPECT_EQ(closed_form_isotropy(fixture("z3_cmonoid.json")).size(), 1u);
  EXPECT_TRUE(same_group(closed_form_isotropy(fixture("crossed_z2_z4.json")), cyclic(4)));
  EXPECT_EQ(closed_form_isotropy(fixture("ssmc_nabla_z2.json")).size(), 1u);
  EXPECT_TRUE(same_group(closed_form_isotropy(fixture("mset_z2_sl2.json")), cyclic(2)));
  EXPECT_TRUE(same_group(closed_form_isotropy(fixture("presheaves/bz3_regular.json")), cyclic(3)));
  EXPECT_EQ(closed_form_isotropy(fixture("presheaves/chain3_grow.json")).size(), 1u);
  const TaggedData cat{DataKind::Category, theories::chain(2)};
  EXPECT_THROW(closed_form_isotropy(cat), Error);
  EXPECT_THROW(make_isotropy_engine(fixture("crossed_z2_z4.json")), Error);
}

TEST(DefInn, Conjugation) {
  const TaggedData s3{DataKind::Group, theories::symmetric_group3()};
  const auto engine = make_isotropy_engine(s3);
  EXPECT_TRUE(check_definable_inner(*engine, {engine->generic(0)}).ok);

  const Bounds b{1, 3};
  std::size_t inner = 0;
  for (const auto& u : engine->candidates(0, b, true)) {
    if (check_definable_inner(*engine, {u}).ok) ++inner;
  }
  // g x g⁻¹ for each g: S3 has trivial center so all six are distinct
  EXPECT_EQ(inner, 6u);
}

TEST(DefInn, NonInvertibleRejected) {
  const TaggedData sl2{DataKind::Monoid, theories::semilattice2()};
  const auto engine = make_isotropy_engine(sl2);
  const auto cands = engine->candidates(0, {1, 3}, true);
  bool seen = false;
  for (const auto& u : cands) {
    if (engine->format(u) != "a x a") continue;
    seen = true;
    const DefInnReport r = check_definable_inner(*engine, {u});
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.condition.empty());
  }
  EXPECT_TRUE(seen);
}

TEST(BruteForce, CyclicMonoid) {
  const TaggedData z2{DataKind::Monoid, theories::cyclic_group(2).monoid};
  const auto engine = make_isotropy_engine(z2);
  const IsotropyResult r = brute_force_isotropy(*engine, {2, 5});
  ASSERT_TRUE(r.group.has_value());
  ASSERT_EQ(r.elements.size(), 2u);
  EXPECT_EQ(engine->format(r.elements[0]), "0 x 0");
  EXPECT_EQ(engine->format(r.elements[1]), "1 x 1");
  EXPECT_TRUE(r.escapes.empty());
  EXPECT_GT(r.candidates, r.elements.size());
}

TEST(BruteForce, MatchesClosedFormOnSmallData) {
  for (const char* f : {"t2.json", "sl2.json", "z2_with_zero.json", "presheaves/bz3_regular.json",
                        "presheaves/parallel_swap.json", "mset_z2_sl2.json"}) {
    const TaggedData d = fixture(f);
    const auto engine = make_isotropy_engine(d);
    const IsotropyResult r = brute_force_isotropy(*engine, {2, 5});
    ASSERT_TRUE(r.group.has_value()) << f;
    EXPECT_TRUE(same_group(*r.group, closed_form_isotropy(d))) << f;
  }
}

TEST(BruteForce, Deterministic) {
  const TaggedData s3{DataKind::Group, theories::symmetric_group3()};
  const auto engine = make_isotropy_engine(s3);
  const IsotropyResult a = brute_force_isotropy(*engine, {1, 3});
  const IsotropyResult b = brute_force_isotropy(*engine, {1, 3});
  EXPECT_EQ(a.elements, b.elements);
  ASSERT_TRUE(a.group.has_value());
  EXPECT_EQ(describe_group(*a.group), "S3");
}

TEST(ThetaSigma, RoundTrip) {
  const auto nabla = theories::delta_nabla(theories::cyclic_group(3).monoid,
                                           theories::Variant::Indiscrete);
  const TaggedData d{DataKind::StrMonCat, nabla};
  const auto engine = make_isotropy_engine(d);
  std::set<std::string> images;
  for (theories::Elem a = 0; a < 3; ++a) {
    const Family t = theta(nabla, a);
    EXPECT_EQ(sigma(nabla, t), a);
    EXPECT_TRUE(check_definable_inner(*engine, t).ok);
    images.insert(engine->format(t));
  }
  EXPECT_EQ(images.size(), 3u);
  EXPECT_EQ(engine->format(theta(nabla, 0)), engine->format(Family{engine->generic(0), engine->generic(1)}));
}
