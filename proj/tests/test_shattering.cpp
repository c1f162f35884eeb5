#include <gtest/gtest.h>

#include "oracles.hpp"
#include "suite.hpp"
#include "vcmod/vcmod.hpp"

using namespace vcmod;

TEST(Vc, KnownFamilies) {
  EXPECT_EQ(vc_dimension(gen_power_set(4)).vc, 4u);
  EXPECT_EQ(vc_dimension(gen_thresholds(9)).vc, 1u);
  EXPECT_EQ(vc_dimension(gen_intervals(9)).vc, 2u);
  EXPECT_EQ(vc_dimension(gen_finite_cofinite(9, 2)).vc, 5u);
  const ConceptClass single(Domain(3), {bits_from_string("000")});
  EXPECT_EQ(vc_dimension(single).vc, 0u);
  EXPECT_THROW(vc_dimension(ConceptClass(Domain(3), {})), InvalidArgument);
}

TEST(Vc, MatchesBruteForceWithValidCertificate) {
  for (const auto& c : suite::random_suite(11, 300, 10, 40)) {
    const auto res = vc_dimension(c.cls);
    ASSERT_EQ(res.vc, oracle::vc(c.cls));
    EXPECT_EQ(trace_count(c.cls, res.certificate.points), std::size_t{1} << res.vc);
    ASSERT_EQ(res.certificate.carvers.size(), std::size_t{1} << res.vc);
    for (std::size_t j = 0; j < res.certificate.carvers.size(); ++j) {
      const auto& concept_ = c.cls[res.certificate.carvers[j]];
      for (std::size_t i = 0; i < res.vc; ++i) {
        EXPECT_EQ(concept_[res.certificate.points[i]], static_cast<bool>(j >> i & 1));
      }
    }
  }
}

TEST(Vc, WitnessIsLexicographicallyLeast) {
  const ConceptClass cls(Domain(4), {bits_from_string("0000"), bits_from_string("0100"), bits_from_string("0010"),
                                     bits_from_string("0110"), bits_from_string("1001")});
  const auto res = vc_dimension(cls);
  EXPECT_EQ(res.vc, 2u);
  EXPECT_EQ(res.certificate.points, (std::vector<Point>{1, 2}));
}

TEST(Vc, NodeBudgetIsEnforced) {
  SearchLimits tight;
  tight.max_nodes = 3;
  EXPECT_THROW(vc_dimension(gen_power_set(6), tight), WorkLimitExceeded);
}

TEST(StrongShattering, AgreesWithOracleOnRandomFamilies) {
  std::size_t positives = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    const auto c = suite::random_case(s, 8, 40);
    const std::size_t m = c.cls.domain_size();
    CounterRng rng(derive_seed(s, "families"));
    // Random disjoint family: each point joins one of k clusters or none.
    const std::size_t k = 1 + rng.below(3);
    std::vector<PointSet> clusters(k, PointSet(m));
    for (Point x = 0; x < m; ++x) {
      const auto slot = rng.below(k + 1);
      if (slot < k) clusters[slot].set(x);
    }
    std::erase_if(clusters, [](const PointSet& p) { return p.none(); });
    const ClusterFamily family(clusters, 1);
    std::vector<oracle::Mask> masks;
    for (const auto& p : clusters) masks.push_back(oracle::mask_of(p));
    const auto res = is_strongly_shattered(c.cls, family);
    ASSERT_EQ(res.shattered, oracle::strongly_shattered(oracle::masks(c.cls), masks));
    if (res.shattered) {
      ++positives;
      // canonical witness contains the family and is itself strongly shattered
      const auto canon = canonical_witness(c.cls, res.carvers);
      ASSERT_EQ(canon.size(), family.size());
      for (std::size_t i = 0; i < family.size(); ++i) EXPECT_TRUE(family[i].is_subset_of(canon[i]));
      EXPECT_TRUE(is_strongly_shattered(c.cls, canon).shattered);
    }
  }
  EXPECT_GT(positives, 20u);
}

TEST(VcThick, MatchesOracle) {
  for (const auto& c : suite::random_suite(23, 150, 8, 40)) {
    for (std::size_t s = 1; s <= 3; ++s) {
      const auto res = vc_thick(c.cls, s);
      ASSERT_EQ(res.vc, oracle::vc_thick(c.cls, s)) << "min_size " << s;
      ASSERT_TRUE(res.certificate.family);
      EXPECT_EQ(res.certificate.family->size(), res.vc);
      EXPECT_TRUE(is_strongly_shattered(c.cls, *res.certificate.family).shattered);
    }
  }
}

TEST(VcThick, EqualsVcAtMinSizeOneAndHandlesOversize) {
  for (const auto& c : suite::random_suite(5, 100, 10, 40)) {
    EXPECT_EQ(vc_thick(c.cls, 1).vc, vc_dimension(c.cls).vc);
  }
  const auto big = vc_thick(gen_power_set(3), 4);
  EXPECT_EQ(big.vc, 0u);
  EXPECT_FALSE(big.note.empty());
  EXPECT_THROW(vc_thick(gen_power_set(3), 0), InvalidArgument);
}

TEST(VcThick, FiniteCofiniteExample) {
  const auto fc = gen_finite_cofinite(16, 2);
  EXPECT_EQ(vc_thick(fc, 1).vc, 5u);
  EXPECT_EQ(vc_thick(fc, 2).vc, 3u);
  EXPECT_EQ(vc_thick(fc, 3).vc, 1u);
}

TEST(VcThick, ClusterDecoratedSeparatesThickFromClassical) {
  const auto cls = gen_cluster_decorated(gen_power_set(2), 3, 4, 9);
  EXPECT_EQ(vc_dimension(cls).vc, 4u);
  EXPECT_EQ(vc_thick(cls, 3).vc, 2u);
}

TEST(VcMod, MatchesOracle) {
  for (const auto& c : suite::random_suite(31, 200, 7, 40)) {
    const PrincipalIdeal ideal(c.negligible);
    const auto res = vc_mod_ideal(c.cls, ideal);
    ASSERT_EQ(res.vc, oracle::vc_mod(c.cls, oracle::mask_of(c.negligible)));
    for (const auto& a : res.certificate.family->clusters()) EXPECT_FALSE(ideal.contains(a));
    EXPECT_TRUE(is_strongly_shattered(c.cls, *res.certificate.family).shattered);
  }
}

TEST(VcMod, EmptyIdealGivesClassicalVc) {
  for (const auto& c : suite::random_suite(37, 100, 10, 40)) {
    EXPECT_EQ(vc_mod_ideal(c.cls, PrincipalIdeal(PointSet(c.cls.domain_size()))).vc, vc_dimension(c.cls).vc);
  }
}

TEST(VcRemoval, ExactMatchesOracleAndGreedyIsUpperBound) {
  for (const auto& c : suite::random_suite(41, 120, 7, 30)) {
    for (std::size_t b = 0; b <= 3 && b <= c.cls.domain_size(); ++b) {
      const auto exact = vc_after_removal(c.cls, b, RemovalMode::exact);
      ASSERT_EQ(exact.vc, oracle::vc_after_removal(c.cls, b));
      EXPECT_FALSE(exact.heuristic);
      EXPECT_LE(exact.removed.count(), b);
      const auto greedy = vc_after_removal(c.cls, b, RemovalMode::greedy);
      EXPECT_TRUE(greedy.heuristic);
      EXPECT_GE(greedy.vc, exact.vc);
    }
  }
}

TEST(VcRemoval, BudgetLimit) {
  SearchLimits tight;
  tight.max_removal_subsets = 10;
  EXPECT_THROW(vc_after_removal(gen_power_set(8), 3, RemovalMode::exact, tight), WorkLimitExceeded);
  EXPECT_THROW(vc_after_removal(gen_power_set(3), 4, RemovalMode::exact), InvalidArgument);
}

TEST(CanonicalWitness, EmptyAtomIsReported) {
  // Concept 0 realises both patterns, so atom 0 comes out empty.
  const ConceptClass cls(Domain(2), {bits_from_string("10"), bits_from_string("01")});
  try {
    canonical_witness(cls, {0, 0});
    FAIL() << "expected EmptyWitness";
  } catch (const EmptyWitness& e) {
    EXPECT_EQ(e.index(), 0u);
  }
  EXPECT_THROW(canonical_witness(cls, {0, 1, 0}), InvalidArgument);
}
