#include <gtest/gtest.h>

#include "isolab/nf/rewrite.hpp"
#include "isolab/suite/properties.hpp"
#include "isolab/theories/constructions.hpp"

using namespace isolab;
using theories::DataKind;

TEST(Properties, DualStrategyAcrossEngines) {
  const auto s3 = theories::symmetric_group3();
  const auto e = nf::make_engine(nf::EngineKind::Group, {DataKind::Group, s3});
  const auto r = suite::dual_strategy(*e, 3, 200);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_EQ(r.checked, 200u);
}

TEST(Properties, SubstitutionLawsSmall) {
  for (const auto& m : theories::enumerate_monoids(2)) {
    const auto r = suite::monoid_subst_laws(m, 2);
    EXPECT_TRUE(r.ok()) << r.first_failure;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Properties, SmcAxiomsOnWords) {
  const auto c = theories::delta_nabla(theories::full_transformation2(), theories::Variant::Discrete);
  const auto r = suite::smc_axioms(c, 2);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  const auto n = theories::delta_nabla(theories::cyclic_group(2).monoid, theories::Variant::Indiscrete);
  EXPECT_TRUE(suite::smc_axioms(n, 2).ok());
}

TEST(Properties, ArrPreservation) {
  const auto c = theories::delta_nabla(theories::cyclic_group(3).monoid, theories::Variant::Indiscrete);
  const auto r = suite::arr_preservation(c, 5);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, PresheafSeparation) {
  const auto c = theories::classifying_category(theories::cyclic_group(2).monoid);
  theories::PresheafData p{"regular", c, {{"0", "1"}}, {{0, 1}, {1, 0}}};
  p.validate();
  const auto r = suite::presheaf_separation(p);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GT(r.checked, 0u);
}

TEST(Properties, IsoReflectionIsSeedDeterministic) {
  const auto a = suite::iso_reflection(11, 40);
  const auto b = suite::iso_reflection(11, 40);
  EXPECT_TRUE(a.ok()) << a.first_failure;
  EXPECT_EQ(a.checked, b.checked);
}

TEST(Properties, FailureRecordsFirstWitness) {
  suite::PropertyResult r("demo");
  r.fail("first");
  r.fail("second");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.first_failure, "first");
}
