#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wavecauchy/constants.hpp"
#include "wavecauchy/dimension.hpp"
#include "wavecauchy/errors.hpp"
#include "wavecauchy/kernel.hpp"

using namespace wavecauchy;

TEST(Dimension, RejectsOutOfRange) {
  EXPECT_THROW(Dimension{0}, DomainError);
  EXPECT_THROW(Dimension{13}, DomainError);
  EXPECT_NO_THROW(Dimension{12});
}

TEST(Dimension, HalfOrder) {
  EXPECT_EQ(Dimension{3}.half_order(), 0);
  EXPECT_EQ(Dimension{5}.half_order(), 1);
  EXPECT_EQ(Dimension{7}.half_order(), 2);
  EXPECT_EQ(Dimension{2}.half_order(), 0);
  EXPECT_EQ(Dimension{4}.half_order(), 1);
  EXPECT_EQ(Dimension{6}.half_order(), 2);
  EXPECT_THROW(Dimension{1}.half_order(), UsageError);
}

TEST(Constants, LowDimensionalAreasAndVolumes) {
  const double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(unit_sphere_area(1), 2.0);
  EXPECT_NEAR(unit_sphere_area(2), 2 * pi, 1e-15);
  EXPECT_NEAR(unit_sphere_area(3), 4 * pi, 1e-14);
  EXPECT_NEAR(unit_sphere_area(4), 2 * pi * pi, 1e-14);
  EXPECT_NEAR(unit_ball_volume(1), 2.0, 1e-15);
  EXPECT_NEAR(unit_ball_volume(2), pi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(3), 4 * pi / 3, 1e-14);
  EXPECT_NEAR(unit_ball_volume(4), pi * pi / 2, 1e-14);
}

TEST(Constants, AreaIsDimensionTimesVolume) {
  for (int n = 1; n <= Dimension::kMax; ++n) {
    EXPECT_NEAR(unit_sphere_area(n), n * unit_ball_volume(n), 1e-13 * unit_sphere_area(n)) << n;
  }
}

// omega_{n+2} = 2 pi omega_n / n, an independent recursion.
TEST(Constants, AreaRecursion) {
  for (int n = 1; n + 2 <= Dimension::kMax; ++n) {
    EXPECT_NEAR(unit_sphere_area(n + 2), 2 * std::numbers::pi * unit_sphere_area(n) / n,
                1e-13 * unit_sphere_area(n + 2));
  }
}

TEST(Constants, OutsideRangeThrows) {
  EXPECT_THROW(unit_sphere_area(0), DomainError);
  EXPECT_THROW(unit_ball_volume(13), DomainError);
  EXPECT_THROW(odd_constant(4), UsageError);
  EXPECT_THROW(odd_constant(1), UsageError);
  EXPECT_THROW(even_constant(3), UsageError);
}

TEST(Constants, OddValues) {
  EXPECT_DOUBLE_EQ(odd_constant(3), 1.0);
  EXPECT_DOUBLE_EQ(odd_constant(5), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(odd_constant(7), 1.0 / 15.0);
  EXPECT_DOUBLE_EQ(odd_constant(9), 1.0 / 105.0);
}

TEST(Constants, EvenValues) {
  EXPECT_DOUBLE_EQ(even_constant(2), 0.5);
  EXPECT_DOUBLE_EQ(even_constant(4), 1.0 / 8.0);
  EXPECT_DOUBLE_EQ(even_constant(6), 1.0 / 48.0);
  EXPECT_DOUBLE_EQ(even_constant(8), 1.0 / 384.0);
}

TEST(Constants, AlternativeRoutesAgree) {
  for (int n = 3; n <= 11; n += 2) {
    EXPECT_NEAR(odd_constant_from_areas(n), odd_constant(n), 1e-14 * odd_constant(n)) << n;
  }
  for (int n = 2; n <= 10; n += 2) {
    EXPECT_NEAR(even_constant_from_descent(n), even_constant(n), 1e-14 * even_constant(n)) << n;
  }
}

TEST(Constants, ZeroFrequencyRoute) {
  for (int n = 2; n <= 7; ++n) {
    const double expected = n % 2 ? odd_constant(n) : even_constant(n);
    EXPECT_NEAR(identity_constant_at_zero_frequency(n), expected, 1e-10 * expected) << n;
    EXPECT_NEAR(identity_constant_at_zero_frequency(n, 0.5), expected, 1e-10 * expected) << n;
  }
}

TEST(Constants, TableMatchesFunctions) {
  const auto& g5 = geom_constants(5);
  EXPECT_EQ(g5.n, 5);
  ASSERT_TRUE(g5.c_n.has_value());
  EXPECT_FALSE(g5.d_n.has_value());
  EXPECT_DOUBLE_EQ(*g5.c_n, odd_constant(5));
  const auto& g4 = geom_constants(4);
  ASSERT_TRUE(g4.d_n.has_value());
  EXPECT_FALSE(g4.c_n.has_value());
  EXPECT_DOUBLE_EQ(g4.v_n, unit_ball_volume(4));
  EXPECT_FALSE(geom_constants(1).c_n.has_value());
}
