#pragma once

// Learning rules over explicit classes and Monte Carlo estimation of their PAC error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/limits.hpp"
#include "vcmod/measures.hpp"
#include "vcmod/parallel.hpp"
#include "vcmod/random.hpp"

namespace vcmod {

// A learning sample (σ, τ): ordered points and the target's 0/1 labels on them.
struct LabeledSample {
  SampleSeq points;
  std::vector<std::uint8_t> labels;

  std::size_t size() const noexcept { return labels.size(); }
};

inline LabeledSample label_sample(const Concept& target, SampleSeq points) {
  LabeledSample s;
  s.labels.reserve(points.points.size());
  for (Point x : points.points) {
    if (x >= target.size()) throw InvalidArgument("sample point outside domain");
    s.labels.push_back(target[x] ? 1 : 0);
  }
  s.points = std::move(points);
  return s;
}

// C ∩ σ = τ.
inline bool is_consistent(const Concept& c, const LabeledSample& sample) {
  if (sample.points.points.size() != sample.labels.size()) {
    throw InvalidArgument("labelled sample: points and labels differ in length");
  }
  for (std::size_t j = 0; j < sample.labels.size(); ++j) {
    if (c[sample.points.points[j]] != (sample.labels[j] != 0)) return false;
  }
  return true;
}

enum class LearnerKind { enumeration, adversarial };

struct LearnerSpec {
  LearnerKind kind = LearnerKind::enumeration;
  std::vector<std::size_t> order;  // enumeration kind: permutation of class indices
};

inline std::vector<std::size_t> identity_order(std::size_t size) {
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

inline void validate_order(const std::vector<std::size_t>& order, std::size_t class_size) {
  if (order.size() != class_size) throw InvalidArgument("learner order is not a permutation of the class");
  std::vector<bool> seen(class_size, false);
  for (auto i : order) {
    if (i >= class_size || seen[i]) throw InvalidArgument("learner order is not a permutation of the class");
    seen[i] = true;
  }
}

// The order-least concept consistent with the sample.
inline std::size_t enumeration_learner(const ConceptClass& cls, const std::vector<std::size_t>& order,
                                       const LabeledSample& sample) {
  for (auto index : order) {
    if (index >= cls.size()) throw InvalidArgument("learner order index out of range");
    if (is_consistent(cls[index], sample)) return index;
  }
  throw NoConsistentHypothesis("no concept of the class is consistent with the sample");
}

inline constexpr double kDistanceTieTolerance = 1e-12;

// White-box worst case: the consistent concept farthest from the target in d_μ, least index on
// ties (within kDistanceTieTolerance). It sees the target and the measure, so it witnesses failure
// of consistent learnability; it is not itself a legal learning rule.
inline std::size_t adversarial_consistent_learner(const ConceptClass& cls, const LabeledSample& sample,
                                                  const Concept& target, const DiscreteMeasure& measure) {
  std::size_t best = cls.size();
  double best_distance = -1;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!is_consistent(cls[i], sample)) continue;
    const double d = symdiff_distance(measure, cls[i], target);
    if (best == cls.size() || d > best_distance + kDistanceTieTolerance) {
      best = i;
      best_distance = d;
    }
  }
  if (best == cls.size()) throw NoConsistentHypothesis("no concept of the class is consistent with the sample");
  return best;
}

struct LearnerImage {
  std::set<std::size_t> indices;  // class indices returned by the learner
  bool sampled = false;           // true: Monte Carlo subset of Ω^n, not exhaustive
  std::uint64_t invocations = 0;
  std::uint64_t consistency_violations = 0;
};

// {L(σ, target ∩ σ) : σ ∈ Ω^n}, exhaustive over all m^n ordered samples.
inline LearnerImage learner_image(const ConceptClass& cls, const std::vector<std::size_t>& order,
                                  std::size_t target, std::size_t n, const SearchLimits& limits = {}) {
  validate_order(order, cls.size());
  if (target >= cls.size()) throw InvalidArgument("learner_image: target index out of range");
  const std::size_t m = cls.domain_size();
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(m);
  if (total > static_cast<long double>(limits.max_enumeration)) {
    throw WorkLimitExceeded("learner_image: m^n = " + std::to_string(static_cast<double>(total)) +
                            " samples exceed limit " + std::to_string(limits.max_enumeration));
  }
  LearnerImage image;
  std::vector<Point> odometer(n, 0);
  while (true) {
    auto sample = label_sample(cls[target], SampleSeq{odometer, 0});
    const auto learned = enumeration_learner(cls, order, sample);
    ++image.invocations;
    if (!is_consistent(cls[learned], sample)) ++image.consistency_violations;
    image.indices.insert(learned);
    std::size_t i = 0;
    while (i < n && ++odometer[i] == m) odometer[i++] = 0;
    if (i == n) break;
  }
  return image;
}

// Same image, estimated from `samples` i.i.d. draws of σ ~ μ^n (flagged as sampled).
inline LearnerImage learner_image_sampled(const ConceptClass& cls, const std::vector<std::size_t>& order,
                                          std::size_t target, std::size_t n,
                                          const DiscreteMeasure& measure, std::size_t samples,
                                          std::uint64_t seed) {
  validate_order(order, cls.size());
  if (target >= cls.size()) throw InvalidArgument("learner_image: target index out of range");
  LearnerImage image;
  image.sampled = true;
  for (std::size_t s = 0; s < samples; ++s) {
    auto sample = label_sample(cls[target], sample_iid(measure, n, derive_seed(seed, "learner-image", s)));
    const auto learned = enumeration_learner(cls, order, sample);
    ++image.invocations;
    if (!is_consistent(cls[learned], sample)) ++image.consistency_violations;
    image.indices.insert(learned);
  }
  return image;
}

// ceil( 128/ε² · ( d·ln((2e²/ε)·ln(2e/ε)) + ln(8/δ) ) ), the fixed "standard" sample complexity.
inline std::uint64_t sample_complexity_bound(double epsilon, double delta, std::size_t d) {
  if (!(epsilon > 0 && epsilon < 1)) throw InvalidArgument("sample_complexity_bound: need 0 < epsilon < 1");
  if (!(delta > 0 && delta < 1)) throw InvalidArgument("sample_complexity_bound: need 0 < delta < 1");
  if (d < 1) throw InvalidArgument("sample_complexity_bound: need d >= 1");
  const long double e = std::numbers::e_v<long double>;
  const long double eps = epsilon;
  const long double inner = (2 * e * e / eps) * std::log(2 * e / eps);
  const long double value =
      128 / (eps * eps) * (static_cast<long double>(d) * std::log(inner) + std::log(8 / static_cast<long double>(delta)));
  return static_cast<std::uint64_t>(std::ceil(value));
}

enum class NoConsistentPolicy { fatal, full_error };

struct PacOptions {
  std::vector<double> epsilons;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  NoConsistentPolicy policy = NoConsistentPolicy::fatal;
  std::size_t jobs = 1;
};

struct PacEstimate {
  std::size_t trials = 0;
  std::size_t sample_size = 0;
  double mean_error = 0;
  double std_error = 0;                      // of the mean
  std::vector<std::pair<double, double>> quantiles;  // (probability, error)
  std::vector<double> exceed_fraction;       // per epsilon: fraction of trials with error > ε
  std::vector<double> exceed_std_error;      // normal-approximation standard error of that fraction
  std::size_t no_consistent = 0;             // trials scored as error 1 under full_error policy
  std::size_t consistency_violations = 0;
  double atom_bound = 0;
  double n_atom_bound = 0;
};

namespace detail {

inline double quantile_of_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0;
  const auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size())));
  return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

}  // namespace detail

// Distribution over i.i.d. σ ~ μ^n of μ(L(σ, C∩σ) △ C) for one target C. `learn` maps a labelled
// sample to a concept and may throw NoConsistentHypothesis. Trial t uses the stream
// derive_seed(seed, "pac-trial", t), so results do not depend on `jobs`.
template <class Learner>
PacEstimate pac_error_estimate(Learner&& learn, const Concept& target, const DiscreteMeasure& measure,
                               std::size_t n, const PacOptions& options) {
  if (options.trials < 1) throw InvalidArgument("pac_error_estimate: need at least one trial");
  if (target.size() != measure.domain_size()) throw InvalidArgument("pac_error_estimate: domain mismatch");
  std::vector<double> errors(options.trials, 0.0);
  std::vector<std::uint8_t> missing(options.trials, 0), inconsistent(options.trials, 0);

  parallel_for(options.trials, options.jobs, [&](std::size_t t) {
    auto sample = label_sample(target, sample_iid(measure, n, derive_seed(options.seed, "pac-trial", t)));
    try {
      const Concept learned = learn(sample);
      if (!is_consistent(learned, sample)) inconsistent[t] = 1;
      errors[t] = symdiff_distance(measure, learned, target);
    } catch (const NoConsistentHypothesis&) {
      if (options.policy == NoConsistentPolicy::fatal) throw;
      missing[t] = 1;
      errors[t] = 1.0;
    }
  });

  PacEstimate est;
  est.trials = options.trials;
  est.sample_size = n;
  est.atom_bound = measure.atom_bound();
  est.n_atom_bound = static_cast<double>(n) * measure.atom_bound();
  const double count = static_cast<double>(options.trials);
  double sum = 0, sum_sq = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    sum += errors[t];
    sum_sq += errors[t] * errors[t];
    est.no_consistent += missing[t];
    est.consistency_violations += inconsistent[t];
  }
  est.mean_error = sum / count;
  const double var = options.trials > 1 ? std::max(0.0, (sum_sq - sum * sum / count) / (count - 1)) : 0.0;
  est.std_error = std::sqrt(var / count);
  for (double eps : options.epsilons) {
    const auto over = std::count_if(errors.begin(), errors.end(), [eps](double e) { return e > eps; });
    const double p = static_cast<double>(over) / count;
    est.exceed_fraction.push_back(p);
    est.exceed_std_error.push_back(std::sqrt(p * (1 - p) / count));
  }
  auto sorted = errors;
  std::sort(sorted.begin(), sorted.end());
  for (double p : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    est.quantiles.emplace_back(p, detail::quantile_of_sorted(sorted, p));
  }
  return est;
}

// Adapters from explicit-class rules to the concept-valued learner interface.
inline auto enumeration_rule(const ConceptClass& cls, std::vector<std::size_t> order) {
  validate_order(order, cls.size());
  return [&cls, order = std::move(order)](const LabeledSample& s) -> Concept {
    return cls[enumeration_learner(cls, order, s)];
  };
}

inline auto adversarial_rule(const ConceptClass& cls, const Concept& target, const DiscreteMeasure& measure) {
  return [&cls, target, &measure](const LabeledSample& s) -> Concept {
    return cls[adversarial_consistent_learner(cls, s, target, measure)];
  };
}

}  // namespace vcmod
