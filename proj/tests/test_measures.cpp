#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "vcmod/vcmod.hpp"

using namespace vcmod;

TEST(Rng, CounterStreamIsReproducibleAndSeedSensitive) {
  CounterRng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
  EXPECT_EQ(a.counter(), 100u);
  EXPECT_NE(derive_seed(1, "pac-trial", 0), derive_seed(1, "pac-trial", 1));
  EXPECT_NE(derive_seed(1, "pac-trial", 0), derive_seed(1, "ugc-trial", 0));
  EXPECT_NE(derive_seed(1, "pac-trial", 0), derive_seed(2, "pac-trial", 0));
}

TEST(Rng, SplitmixFirstOutputsArePinned) {
  // Reference outputs of splitmix64 seeded with 0 (state increments by the golden gamma).
  EXPECT_EQ(splitmix64_mix(0x9e3779b97f4a7c15ULL), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64_mix(2 * 0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(Rng, BelowIsRoughlyUniform) {
  CounterRng rng(7);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 60000; ++i) ++hist[rng.below(6)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(Measure, ValidatesWeights) {
  EXPECT_THROW(DiscreteMeasure({}), InvalidArgument);
  EXPECT_THROW(DiscreteMeasure({0.5, 0.6}), InvalidArgument);
  EXPECT_THROW(DiscreteMeasure({1.5, -0.5}), InvalidArgument);
  EXPECT_THROW(DiscreteMeasure({NAN, 1.0}), InvalidArgument);
  const DiscreteMeasure near({0.5, 0.5 + 1e-10});
  EXPECT_NEAR(near[0] + near[1], 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(near.atom_bound(), near[1]);
}

TEST(Measure, UniformAndMixture) {
  const auto u = uniform_on(bits_from_string("0110"));
  EXPECT_DOUBLE_EQ(u[0], 0.0);
  EXPECT_DOUBLE_EQ(u[1], 0.5);
  EXPECT_DOUBLE_EQ(u.atom_bound(), 0.5);
  const auto mix = mixture({u, uniform_on(bits_from_string("1000"))}, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(mix[0], 0.5);
  EXPECT_DOUBLE_EQ(mix[2], 0.25);
  EXPECT_THROW(mixture({u}, {0.9}), InvalidArgument);
  EXPECT_THROW(uniform_on(PointSet(3)), InvalidArgument);
}

TEST(Measure, DistanceIsAPseudometric) {
  const DiscreteMeasure mu({0.1, 0.2, 0.3, 0.4});
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      const Bitset A(4, a), B(4, b);
      EXPECT_DOUBLE_EQ(symdiff_distance(mu, A, B), symdiff_distance(mu, B, A));
      for (std::uint32_t c = 0; c < 16; ++c) {
        const Bitset C(4, c);
        EXPECT_LE(symdiff_distance(mu, A, C), symdiff_distance(mu, A, B) + symdiff_distance(mu, B, C) + 1e-15);
      }
    }
  }
  EXPECT_DOUBLE_EQ(measure_of(mu, bits_from_string("1001")), 0.5);
}

TEST(Sampling, NeverDrawsZeroMassAndMatchesFrequencies) {
  const DiscreteMeasure mu({0.0, 0.25, 0.0, 0.75, 0.0});
  const auto s = sample_iid(mu, 40000, 99);
  std::vector<int> hist(5, 0);
  for (Point x : s.points) ++hist[x];
  EXPECT_EQ(hist[0] + hist[2] + hist[4], 0);
  EXPECT_NEAR(hist[1] / 40000.0, 0.25, 0.01);
  EXPECT_EQ(mu.quantile(0.0), 1u);
  EXPECT_EQ(mu.quantile(std::nextafter(1.0, 0.0)), 3u);
  EXPECT_EQ(sample_iid(mu, 100, 5).points, sample_iid(mu, 100, 5).points);
}
