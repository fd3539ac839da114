#include <gtest/gtest.h>

#include <cmath>

#include "wavecauchy/errors.hpp"
#include "wavecauchy/wave_residual.hpp"

using namespace wavecauchy;

TEST(WaveResidual, LinearInTimeAndSpace) {
  const auto u = [](std::span<const double> x, double t) { return t * x[0]; };
  const std::vector<double> c{0.3, -0.1};
  EXPECT_LE(wave_residual(centred_slab(u, c, 1.0, 5, 5, 0.1, 0.1)), 1e-12);
}

TEST(WaveResidual, QuadraticSolution) {
  const auto u = [](std::span<const double> x, double t) { return x[0] * x[0] + t * t; };
  const std::vector<double> c{0.4};
  EXPECT_LE(wave_residual(centred_slab(u, c, 1.0, 3, 3, 0.05, 0.05)), 1e-10);
}

TEST(WaveResidual, SecondOrderDecay) {
  const auto u = [](std::span<const double> x, double t) { return std::cos(x[0]) * std::cos(t); };
  const std::vector<double> c{0.3};
  double prev = 0.0;
  for (double h : {0.2, 0.1, 0.05}) {
    const double r = wave_residual(centred_slab(u, c, 1.0, 3, 3, h, h / 2));
    if (prev > 0.0) EXPECT_NEAR(prev / r, 4.0, 0.1);
    prev = r;
  }
}

TEST(WaveResidual, SlabLayout) {
  const auto u = [](std::span<const double> x, double t) { return 10 * t + x[0] + 100 * x[1]; };
  const std::vector<double> o{0.0, 0.0};
  const auto s = sample_slab(u, 2, o, 0.0, 3, 2, 1.0, 1.0);
  EXPECT_EQ(s.spatial_size(), 9u);
  EXPECT_EQ(s.values.size(), 18u);
  EXPECT_DOUBLE_EQ(s.at(1, 5), 10 + 1 + 200);
}

TEST(WaveResidual, ThinSlabIsUsageError) {
  const auto u = [](std::span<const double>, double) { return 0.0; };
  const std::vector<double> o{0.0};
  EXPECT_THROW(wave_residual(sample_slab(u, 1, o, 0.0, 3, 2, 0.1, 0.1)), UsageError);
  EXPECT_THROW(wave_residual(sample_slab(u, 1, o, 0.0, 2, 3, 0.1, 0.1)), UsageError);
  const std::vector<double> c{0.0};
  EXPECT_THROW(centred_slab(u, c, 1.0, 4, 3, 0.1, 0.1), UsageError);
}
