#pragma once

// Deterministic concept-class generators. Orderings are part of each generator's contract because
// the enumeration learner is order-sensitive.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/limits.hpp"
#include "vcmod/random.hpp"

namespace vcmod {

namespace detail {

// Visit all k-subsets of {0..m-1} in lexicographic order.
template <class Visit>
void for_each_k_subset(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return;
  std::vector<Point> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline long double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  return r;
}

}  // namespace detail

// All subsets of size <= t and of co-size <= t (t < m/2). Order: ∅, Ω, then by size ascending, then
// lexicographic by sorted members within a size.
inline ConceptClass gen_finite_cofinite(std::size_t m, std::size_t t, const SearchLimits& limits = {}) {
  if (m == 0 || 2 * t >= m) throw InvalidArgument("gen_finite_cofinite: need 0 <= t < m/2");
  long double count = 0;
  for (std::size_t k = 0; k <= t; ++k) count += 2 * detail::binomial(m, k);
  if (count > static_cast<long double>(limits.max_enumeration)) {
    throw WorkLimitExceeded("gen_finite_cofinite: class would hold " +
                            std::to_string(static_cast<double>(count)) + " concepts");
  }
  std::vector<Concept> concepts{Concept(m), full_set(m)};
  for (std::size_t k = 1; k <= t; ++k) {
    detail::for_each_k_subset(m, k, [&](const std::vector<Point>& idx) {
      concepts.push_back(bits_from_indices(m, idx));
    });
  }
  for (std::size_t co = t; co >= 1; --co) {
    std::vector<Concept> level;
    detail::for_each_k_subset(m, co, [&](const std::vector<Point>& idx) {
      level.push_back(~bits_from_indices(m, idx));
    });
    std::sort(level.begin(), level.end(), lex_less);
    for (auto& c : level) concepts.push_back(std::move(c));
  }
  return ConceptClass(Domain(m), std::move(concepts), true);
}

// ∅ followed by every discrete interval [i..j], ordered by (i, j).
inline ConceptClass gen_intervals(std::size_t m) {
  if (m < 2) throw InvalidArgument("gen_intervals: need m >= 2");
  std::vector<Concept> concepts{Concept(m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Concept c(m);
      for (std::size_t x = i; x <= j; ++x) c.set(x);
      concepts.push_back(std::move(c));
    }
  }
  return ConceptClass(Domain(m), std::move(concepts), true);
}

// Initial segments {0..j-1}, j = 0..m.
inline ConceptClass gen_thresholds(std::size_t m) {
  if (m < 1) throw InvalidArgument("gen_thresholds: need m >= 1");
  std::vector<Concept> concepts;
  for (std::size_t j = 0; j <= m; ++j) {
    Concept c(m);
    for (std::size_t x = 0; x < j; ++x) c.set(x);
    concepts.push_back(std::move(c));
  }
  return ConceptClass(Domain(m), std::move(concepts), true);
}

// All 2^m subsets; concept k has point i iff bit i of k is set.
inline ConceptClass gen_power_set(std::size_t m) {
  if (m < 1 || m > 20) throw InvalidArgument("gen_power_set: need 1 <= m <= 20");
  std::vector<Concept> concepts;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) concepts.emplace_back(m, k);
  return ConceptClass(Domain(m), std::move(concepts), true);
}

// Base point i becomes the cluster [i·cluster_size, (i+1)·cluster_size); the last `noise` points
// are noise. Every base concept appears blown up with no noise points, and one seeded anchor base
// concept additionally appears with every nonempty noise pattern, so the noise points are fully
// shattered. Since only the anchor carries noise, no noise-only cluster can be carved jointly with a
// base cluster, so the thick VC dimension at cluster_size is max(VC(base), ⌊noise/cluster_size⌋):
// that of the base whenever VC(base) >= 1 and noise < 2·cluster_size. The classical VC dimension is
// at least `noise`. Deduplicated, base copies first.
inline ConceptClass gen_cluster_decorated(const ConceptClass& base, std::size_t cluster_size,
                                          std::size_t noise, std::uint64_t seed) {
  if (base.empty()) throw InvalidArgument("gen_cluster_decorated: empty base class");
  if (cluster_size < 1) throw InvalidArgument("gen_cluster_decorated: cluster_size must be positive");
  if (noise > 20) throw InvalidArgument("gen_cluster_decorated: at most 20 noise points");
  const std::size_t r = base.domain_size();
  const std::size_t m = r * cluster_size + noise;
  auto blow_up = [&](const Concept& c) {
    Concept out(m);
    for (auto i = c.find_first(); i != Bitset::npos; i = c.find_next(i)) {
      for (std::size_t k = 0; k < cluster_size; ++k) out.set(i * cluster_size + k);
    }
    return out;
  };
  std::vector<Concept> concepts;
  for (const auto& c : base.concepts()) concepts.push_back(blow_up(c));
  CounterRng rng(derive_seed(seed, "cluster-decorated"));
  const auto anchor = static_cast<std::size_t>(rng.below(base.size()));
  const Concept anchored = blow_up(base[anchor]);
  for (std::uint64_t pattern = 1; pattern < (std::uint64_t{1} << noise); ++pattern) {
    Concept c = anchored;
    for (std::size_t k = 0; k < noise; ++k) {
      if (pattern >> k & 1) c.set(r * cluster_size + k);
    }
    concepts.push_back(std::move(c));
  }
  return ConceptClass(Domain(m), std::move(concepts), true);
}

// `count` rows of independent Bernoulli(density) memberships, deduplicated (first occurrence kept).
inline ConceptClass gen_random(std::size_t m, std::size_t count, double density, std::uint64_t seed) {
  if (m < 1) throw InvalidArgument("gen_random: need m >= 1");
  if (count < 1) throw InvalidArgument("gen_random: need count >= 1");
  if (!(density >= 0 && density <= 1)) throw InvalidArgument("gen_random: density must lie in [0, 1]");
  CounterRng rng(derive_seed(seed, "gen-random"));
  std::vector<Concept> concepts;
  concepts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Concept c(m);
    for (std::size_t x = 0; x < m; ++x) {
      if (rng.bernoulli(density)) c.set(x);
    }
    concepts.push_back(std::move(c));
  }
  return ConceptClass(Domain(m), std::move(concepts), true);
}

}  // namespace vcmod
