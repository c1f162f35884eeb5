#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vcmod/vcmod.hpp"

using namespace vcmod;

namespace {

LabeledSample sample_of(const Concept& target, std::vector<Point> points) {
  return label_sample(target, SampleSeq{std::move(points), 0});
}

}  // namespace

TEST(Consistency, LabelsAgree) {
  const auto t = bits_from_string("1010");
  const auto s = sample_of(t, {0, 1, 0});
  EXPECT_EQ(s.labels, (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_TRUE(is_consistent(t, s));
  EXPECT_FALSE(is_consistent(bits_from_string("0010"), s));
  EXPECT_THROW(sample_of(t, {4}), InvalidArgument);
}

TEST(Enumeration, ReturnsOrderLeastConsistent) {
  const auto cls = gen_thresholds(5);
  const auto target = cls[3];
  const auto s = sample_of(target, {0, 4});
  EXPECT_EQ(enumeration_learner(cls, identity_order(cls.size()), s), 1u);
  std::vector<std::size_t> reversed(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) reversed[i] = cls.size() - 1 - i;
  EXPECT_EQ(enumeration_learner(cls, reversed, s), 4u);
  EXPECT_THROW(validate_order({0, 0, 1, 2, 3, 4}, cls.size()), InvalidArgument);
  EXPECT_THROW(validate_order({0, 1}, cls.size()), InvalidArgument);
}

TEST(Enumeration, ThrowsWhenNothingFits) {
  const ConceptClass cls(Domain(2), {bits_from_string("10")});
  auto s = sample_of(bits_from_string("01"), {1});
  EXPECT_THROW(enumeration_learner(cls, identity_order(1), s), NoConsistentHypothesis);
}

TEST(Adversary, PicksFarthestConsistentWithLeastIndexTies) {
  const auto cls = gen_power_set(3);
  const auto mu = uniform_on(full_set(3));
  const auto target = bits_from_string("000");
  const auto s = sample_of(target, {0});
  // Consistent: point 0 absent. Farthest: {1, 2}, index 6.
  EXPECT_EQ(adversarial_consistent_learner(cls, s, target, mu), 6u);
  // Under a measure ignoring point 2, {1} (2) and {1,2} (6) tie; least index wins.
  const DiscreteMeasure skew({0.5, 0.5, 0.0});
  EXPECT_EQ(adversarial_consistent_learner(cls, s, target, skew), 2u);
}

TEST(Adversary, IsAtLeastAsBadAsAnyConsistentRule) {
  const auto cls = gen_intervals(6);
  const auto mu = uniform_on(full_set(6));
  for (std::size_t t = 0; t < cls.size(); ++t) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto s = label_sample(cls[t], sample_iid(mu, 3, seed));
      const auto adv = adversarial_consistent_learner(cls, s, cls[t], mu);
      const auto en = enumeration_learner(cls, identity_order(cls.size()), s);
      EXPECT_TRUE(is_consistent(cls[adv], s));
      EXPECT_GE(symdiff_distance(mu, cls[adv], cls[t]), symdiff_distance(mu, cls[en], cls[t]) - 1e-12);
    }
  }
}

TEST(LearnerImage, StaysWithinPrefixOfOrder) {
  for (const auto& cls : {gen_thresholds(4), gen_intervals(4), gen_finite_cofinite(5, 1)}) {
    auto order = identity_order(cls.size());
    std::reverse(order.begin() + 1, order.end());
    for (std::size_t t = 0; t < cls.size(); ++t) {
      const auto image = learner_image(cls, order, t, 3);
      EXPECT_EQ(image.consistency_violations, 0u);
      EXPECT_FALSE(image.sampled);
      const auto pos = std::find(order.begin(), order.end(), t) - order.begin();
      for (auto idx : image.indices) {
        EXPECT_LE(std::find(order.begin(), order.end(), idx) - order.begin(), pos);
      }
    }
  }
}

TEST(LearnerImage, SampledIsSubsetOfExhaustive) {
  const auto cls = gen_intervals(5);
  const auto order = identity_order(cls.size());
  const auto mu = uniform_on(full_set(5));
  for (std::size_t t = 0; t < cls.size(); t += 3) {
    const auto full = learner_image(cls, order, t, 2);
    const auto part = learner_image_sampled(cls, order, t, 2, mu, 200, 17);
    EXPECT_TRUE(part.sampled);
    for (auto i : part.indices) EXPECT_TRUE(full.indices.count(i));
  }
  SearchLimits tight;
  tight.max_enumeration = 100;
  EXPECT_THROW(learner_image(cls, order, 0, 3, tight), WorkLimitExceeded);
}

TEST(Bound, MatchesClosedFormAndGolden) {
  EXPECT_EQ(sample_complexity_bound(0.1, 0.05, 2), 228315u);
  EXPECT_EQ(sample_complexity_bound(0.1, 0.1, 1), 137767u);
  EXPECT_EQ(sample_complexity_bound(0.2, 0.1, 1), 31614u);
  EXPECT_EQ(sample_complexity_bound(0.2, 0.1, 2), 49206u);
  EXPECT_EQ(sample_complexity_bound(0.2, 0.1, 3), 66797u);
  EXPECT_THROW(sample_complexity_bound(0, 0.1, 1), InvalidArgument);
  EXPECT_THROW(sample_complexity_bound(0.1, 1, 1), InvalidArgument);
  EXPECT_THROW(sample_complexity_bound(0.1, 0.1, 0), InvalidArgument);
}

TEST(Bound, MonotoneInParameters) {
  for (std::size_t d = 1; d < 6; ++d) {
    EXPECT_LT(sample_complexity_bound(0.1, 0.1, d), sample_complexity_bound(0.1, 0.1, d + 1));
    EXPECT_LT(sample_complexity_bound(0.2, 0.1, d), sample_complexity_bound(0.1, 0.1, d));
    EXPECT_LT(sample_complexity_bound(0.1, 0.2, d), sample_complexity_bound(0.1, 0.1, d));
  }
}

TEST(Pac, EstimateIsIndependentOfJobs) {
  const auto cls = gen_intervals(8);
  const auto mu = uniform_on(full_set(8));
  PacOptions opts{{0.1, 0.2}, 400, 5, NoConsistentPolicy::fatal, 1};
  const auto a = pac_error_estimate(enumeration_rule(cls, identity_order(cls.size())), cls[7], mu, 6, opts);
  opts.jobs = 3;
  const auto b = pac_error_estimate(enumeration_rule(cls, identity_order(cls.size())), cls[7], mu, 6, opts);
  EXPECT_EQ(a.mean_error, b.mean_error);
  EXPECT_EQ(a.exceed_fraction, b.exceed_fraction);
  EXPECT_EQ(a.quantiles, b.quantiles);
  EXPECT_DOUBLE_EQ(a.n_atom_bound, 6.0 / 8.0);
  EXPECT_EQ(a.consistency_violations, 0u);
}

TEST(Pac, NoConsistentPolicies) {
  const ConceptClass cls(Domain(2), {bits_from_string("10")});
  const auto mu = uniform_on(full_set(2));
  const auto target = bits_from_string("01");
  auto rule = [&](const LabeledSample& s) { return cls[enumeration_learner(cls, identity_order(1), s)]; };
  PacOptions opts{{0.5}, 50, 1, NoConsistentPolicy::fatal, 1};
  EXPECT_THROW(pac_error_estimate(rule, target, mu, 4, opts), NoConsistentHypothesis);
  opts.policy = NoConsistentPolicy::full_error;
  const auto est = pac_error_estimate(rule, target, mu, 4, opts);
  EXPECT_GT(est.no_consistent, 0u);
  EXPECT_LE(est.mean_error, 1.0);
}

TEST(Pac, ErrorShrinksWithSampleSize) {
  const auto cls = gen_thresholds(20);
  const auto mu = uniform_on(full_set(20));
  const PacOptions opts{{0.1}, 300, 3, NoConsistentPolicy::fatal, 1};
  const auto rule = enumeration_rule(cls, identity_order(cls.size()));
  const auto small = pac_error_estimate(rule, cls[12], mu, 5, opts);
  const auto large = pac_error_estimate(rule, cls[12], mu, 200, opts);
  EXPECT_LT(large.mean_error, small.mean_error);
  EXPECT_EQ(large.exceed_fraction[0], 0.0);
}
