#pragma once

// Discrete probability measures on a finite domain. A measure whose largest point mass is at most α
// stands in for a non-atomic one "at level α"; reports carry α (and n·α) so the approximation stays
// visible.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/random.hpp"

namespace vcmod {

inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kNormalizeTolerance = 1e-9;

class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidArgument("measure over an empty domain");
    double total = 0;
    for (double w : weights_) {
      if (!std::isfinite(w) || w < 0) throw InvalidArgument("measure weights must be finite and >= 0");
      total += w;
    }
    const double gap = std::abs(total - 1.0);
    if (gap > kNormalizeTolerance) {
      throw InvalidArgument("measure weights sum to " + std::to_string(total) + ", not 1");
    }
    if (gap > kSimplexTolerance) {
      for (double& w : weights_) w /= total;
    }
    atom_bound_ = *std::max_element(weights_.begin(), weights_.end());
    cdf_.resize(weights_.size());
    std::partial_sum(weights_.begin(), weights_.end(), cdf_.begin());
  }

  std::size_t domain_size() const noexcept { return weights_.size(); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double atom_bound() const noexcept { return atom_bound_; }
  double operator[](Point x) const { return weights_.at(x); }

  // Inverse CDF: the least point whose cumulative mass exceeds u·total. Zero-mass points never win.
  Point quantile(double u) const {
    const double target = u * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    if (it == cdf_.end()) --it;
    while (weights_[static_cast<std::size_t>(it - cdf_.begin())] == 0.0) --it;
    return static_cast<Point>(it - cdf_.begin());
  }

 private:
  std::vector<double> weights_;
  std::vector<double> cdf_;
  double atom_bound_ = 0;
};

struct SampleSeq {
  std::vector<Point> points;
  std::uint64_t seed = 0;
};

inline DiscreteMeasure uniform_on(const PointSet& support) {
  const auto size = support.count();
  if (size == 0) throw InvalidArgument("uniform_on: empty support");
  std::vector<double> w(support.size(), 0.0);
  const double mass = 1.0 / static_cast<double>(size);
  for (auto i = support.find_first(); i != Bitset::npos; i = support.find_next(i)) w[i] = mass;
  return DiscreteMeasure(std::move(w));
}

inline DiscreteMeasure mixture(const std::vector<DiscreteMeasure>& measures,
                               const std::vector<double>& coefficients) {
  if (measures.empty() || measures.size() != coefficients.size()) {
    throw InvalidArgument("mixture: need one coefficient per measure");
  }
  double total = 0;
  for (double c : coefficients) {
    if (!std::isfinite(c) || c < 0) throw InvalidArgument("mixture: coefficients must be >= 0");
    total += c;
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    throw InvalidArgument("mixture: coefficients sum to " + std::to_string(total) + ", not 1");
  }
  const auto m = measures.front().domain_size();
  std::vector<double> w(m, 0.0);
  for (std::size_t k = 0; k < measures.size(); ++k) {
    if (measures[k].domain_size() != m) throw InvalidArgument("mixture: measures over different domains");
    for (std::size_t x = 0; x < m; ++x) w[x] += coefficients[k] * measures[k][x];
  }
  return DiscreteMeasure(std::move(w));
}

inline SampleSeq sample_iid(const DiscreteMeasure& measure, std::size_t n, std::uint64_t seed) {
  SampleSeq out;
  out.seed = seed;
  out.points.reserve(n);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) out.points.push_back(measure.quantile(rng.uniform01()));
  return out;
}

inline double measure_of(const DiscreteMeasure& measure, const PointSet& set) {
  if (set.size() != measure.domain_size()) throw InvalidArgument("measure_of: domain mismatch");
  double total = 0;
  for (auto i = set.find_first(); i != Bitset::npos; i = set.find_next(i)) total += measure[i];
  return total;
}

// d_μ(A, B) = μ(A △ B).
inline double symdiff_distance(const DiscreteMeasure& measure, const Concept& a, const Concept& b) {
  if (a.size() != measure.domain_size() || b.size() != measure.domain_size()) {
    throw InvalidArgument("symdiff_distance: domain mismatch");
  }
  return measure_of(measure, a ^ b);
}

}  // namespace vcmod
