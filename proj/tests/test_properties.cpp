#include <gtest/gtest.h>

#include "property_suite.hpp"

constexpr int kInstances = 1000;

#define PROPERTY_TEST(Name, fn)                      \
  TEST(Properties, Name) {                           \
    props::Outcome o = props::fn(kInstances);        \
    EXPECT_EQ(o.instances, kInstances);              \
    EXPECT_EQ(o.failures, 0) << "first: " << o.first; \
  }

PROPERTY_TEST(SectionDecomposition, section_decomposition)
PROPERTY_TEST(LambdaDeltaCommutation, lambda_delta)
PROPERTY_TEST(Frobenius, frobenius_power)
PROPERTY_TEST(HeightSubadditivity, height_subadditivity)
PROPERTY_TEST(GcdDivisibility, gcd_divisibility)
PROPERTY_TEST(SplitRecovery, split_recovery)

// the checks must be able to fail
TEST(Properties, DetectsCorruption) {
  using namespace holocert;
  props::Outcome o;
  FpPoly a = FpPoly::from_ints(PrimeField{5}, {1, 2, 3});
  if (a.pow(5) != a.compose_power(5) + FpPoly::one(PrimeField{5})) o.fail("x");
  EXPECT_FALSE(o.ok());
  EXPECT_EQ(o.first, "x");
}
