#pragma once

// Implicit model of the finite/cofinite class {A : |A| <= t or |Ω \ A| <= t}. With m = 1000 and
// t >= 5 the class has more than 10^12 members, so learners and the uniform deviation are computed
// in closed form. Each routine returns exactly what the matching scan over gen_finite_cofinite(m, t)
// returns, in that generator's order (∅, Ω, then by size, then lexicographic).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/classgen.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/learning.hpp"
#include "vcmod/measures.hpp"

namespace vcmod {

class FiniteCofiniteClass {
 public:
  FiniteCofiniteClass(std::size_t m, std::size_t t) : m_(m), t_(t) {
    if (m_ == 0 || 2 * t_ >= m_) throw InvalidArgument("finite/cofinite class: need 0 <= t < m/2");
  }

  std::size_t domain_size() const noexcept { return m_; }
  std::size_t threshold() const noexcept { return t_; }

  bool contains(const Concept& c) const {
    if (c.size() != m_) return false;
    const auto k = c.count();
    return k <= t_ || k >= m_ - t_;
  }

  long double cardinality() const {
    long double total = 0;
    for (std::size_t k = 0; k <= t_; ++k) total += 2 * detail::binomial(m_, k);
    return total;
  }

  ConceptClass materialize(const SearchLimits& limits = {}) const { return gen_finite_cofinite(m_, t_, limits); }

 private:
  std::size_t m_;
  std::size_t t_;
};

namespace detail {

struct SampleSplit {
  PointSet positive;
  PointSet negative;
  std::vector<Point> free;  // points not in the sample, ascending
};

inline SampleSplit split_sample(std::size_t m, const LabeledSample& sample) {
  SampleSplit s{PointSet(m), PointSet(m), {}};
  for (std::size_t j = 0; j < sample.size(); ++j) {
    const Point x = sample.points.points[j];
    if (x >= m) throw InvalidArgument("sample point outside domain");
    (sample.labels[j] ? s.positive : s.negative).set(x);
  }
  if (s.positive.intersects(s.negative)) {
    throw NoConsistentHypothesis("a point carries both labels; no concept is consistent");
  }
  const PointSet seen = s.positive | s.negative;
  for (Point x = 0; x < m; ++x) {
    if (!seen[x]) s.free.push_back(x);
  }
  return s;
}

}  // namespace detail

// Order-least consistent member: ∅, else Ω, else the positive points if few enough, else the
// cofinite set whose complement is the negatives padded with the largest unseen points up to size t
// (largest complement = smallest set; largest padding = lexicographically least set).
inline Concept enumeration_learner(const FiniteCofiniteClass& cls, const LabeledSample& sample) {
  const std::size_t m = cls.domain_size(), t = cls.threshold();
  auto s = detail::split_sample(m, sample);
  if (s.positive.none()) return Concept(m);
  if (s.negative.none()) return full_set(m);
  if (s.positive.count() <= t) return s.positive;
  if (s.negative.count() <= t) {
    PointSet complement = s.negative;
    for (auto it = s.free.rbegin(); it != s.free.rend() && complement.count() < t; ++it) complement.set(*it);
    return ~complement;
  }
  throw NoConsistentHypothesis("sample has more than t positives and more than t negatives");
}

// Consistent member farthest from the target in d_μ; ties within kDistanceTieTolerance go to the
// earlier member in generator order.
inline Concept adversarial_consistent_learner(const FiniteCofiniteClass& cls, const LabeledSample& sample,
                                              const Concept& target, const DiscreteMeasure& measure) {
  const std::size_t m = cls.domain_size(), t = cls.threshold();
  if (target.size() != m || measure.domain_size() != m) throw InvalidArgument("adversary: domain mismatch");
  auto s = detail::split_sample(m, sample);

  struct Candidate {
    Concept set;
    double distance;
    int rank;  // 0: ∅, 1: Ω, 2: other finite, 3: other cofinite
  };
  std::vector<Candidate> options;

  // Finite members S ⊇ positives avoiding negatives. Adding an unseen x changes μ(S △ T) by +w(x)
  // when x ∉ T and by -w(x) otherwise; take strictly improving points, best first, lowest index on
  // equal gain (smaller size, then lexicographically least).
  if (s.positive.count() <= t) {
    std::vector<Point> gainers;
    for (Point x : s.free) {
      if (!target[x] && measure[x] > 0) gainers.push_back(x);
    }
    std::stable_sort(gainers.begin(), gainers.end(),
                     [&](Point a, Point b) { return measure[a] > measure[b]; });
    Concept set = s.positive;
    for (Point x : gainers) {
      if (set.count() >= t) break;
      set.set(x);
    }
    const int rank = set.none() ? 0 : 2;
    options.push_back({set, symdiff_distance(measure, set, target), rank});
  }

  // Cofinite members Ω \ Q with Q ⊇ negatives avoiding positives. Adding an unseen x to Q changes
  // the distance by +w(x) when x ∈ T and by -w(x) otherwise; zero-gain points still shrink a proper
  // cofinite set (earlier in order), and on equal gain the highest index keeps it lexicographically
  // least.
  if (s.negative.count() <= t) {
    std::vector<Point> gainers, neutral;
    for (auto it = s.free.rbegin(); it != s.free.rend(); ++it) {
      if (measure[*it] == 0) {
        neutral.push_back(*it);
      } else if (target[*it]) {
        gainers.push_back(*it);
      }
    }
    std::stable_sort(gainers.begin(), gainers.end(),
                     [&](Point a, Point b) { return measure[a] > measure[b]; });
    PointSet complement = s.negative;
    for (Point x : gainers) {
      if (complement.count() >= t) break;
      complement.set(x);
    }
    // Ω sits at index 1, ahead of every other cofinite member, so pad only a nonempty complement.
    for (Point x : neutral) {
      if (complement.none() || complement.count() >= t) break;
      complement.set(x);
    }
    Concept set = ~complement;
    const int rank = complement.none() ? 1 : 3;
    options.push_back({set, symdiff_distance(measure, set, target), rank});
  }

  if (options.empty()) throw NoConsistentHypothesis("sample has more than t positives and more than t negatives");
  const Candidate* best = &options.front();
  for (const auto& c : options) {
    if (c.distance > best->distance + kDistanceTieTolerance ||
        (std::abs(c.distance - best->distance) <= kDistanceTieTolerance && c.rank < best->rank)) {
      best = &c;
    }
  }
  return best->set;
}

// sup over members C of |μ(C) − μ_n(C)|. With w = μ_n − μ pointwise, a finite member gives Σ_S w and
// a cofinite member gives −Σ_Q w for its complement Q, so the supremum is the largest |Σ_Q w| over
// |Q| <= t: the t largest positive entries or the t most negative ones.
inline double sup_deviation(const FiniteCofiniteClass& cls, const DiscreteMeasure& measure,
                            const std::vector<std::uint32_t>& counts, std::size_t n) {
  const std::size_t m = cls.domain_size();
  if (measure.domain_size() != m || counts.size() != m) throw InvalidArgument("sup_deviation: domain mismatch");
  if (n == 0) throw InvalidArgument("sup_deviation: empty sample");
  std::vector<double> w(m);
  for (std::size_t x = 0; x < m; ++x) w[x] = static_cast<double>(counts[x]) / static_cast<double>(n) - measure[x];
  std::sort(w.begin(), w.end());
  const std::size_t t = cls.threshold();
  double low = 0, high = 0;
  for (std::size_t k = 0; k < t && w[k] < 0; ++k) low -= w[k];
  for (std::size_t k = 0; k < t && w[m - 1 - k] > 0; ++k) high += w[m - 1 - k];
  return std::max(low, high);
}

}  // namespace vcmod
