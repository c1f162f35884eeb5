#pragma once

// Uniform deviation of empirical measures over a class, and packing numbers in d_μ.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/finite_cofinite.hpp"
#include "vcmod/learning.hpp"
#include "vcmod/limits.hpp"
#include "vcmod/measures.hpp"
#include "vcmod/parallel.hpp"
#include "vcmod/random.hpp"

namespace vcmod {

// Multiplicity of each point in a sample.
inline std::vector<std::uint32_t> point_counts(std::size_t m, const SampleSeq& sample) {
  std::vector<std::uint32_t> counts(m, 0);
  for (Point x : sample.points) ++counts.at(x);
  return counts;
}

// sup over C of |μ(C) − μ_n(C)| by a full scan of the stored class.
inline double sup_deviation(const ConceptClass& cls, const DiscreteMeasure& measure,
                            const std::vector<std::uint32_t>& counts, std::size_t n) {
  const std::size_t m = cls.domain_size();
  if (measure.domain_size() != m || counts.size() != m) throw InvalidArgument("sup_deviation: domain mismatch");
  if (n == 0) throw InvalidArgument("sup_deviation: empty sample");
  std::vector<double> w(m);
  for (std::size_t x = 0; x < m; ++x) w[x] = static_cast<double>(counts[x]) / static_cast<double>(n) - measure[x];
  double sup = 0;
  for (const auto& c : cls.concepts()) {
    double s = 0;
    for (auto i = c.find_first(); i != Bitset::npos; i = c.find_next(i)) s += w[i];
    sup = std::max(sup, std::abs(s));
  }
  return sup;
}

struct DeviationStats {
  std::vector<double> per_trial;
  double mean = 0;
  std::vector<std::pair<double, double>> quantiles;  // (probability, deviation)
  double atom_bound = 0;
  double n_atom_bound = 0;
};

// Trial t draws σ from the stream derive_seed(seed, "ugc-trial", t).
template <class Class>
DeviationStats empirical_sup_deviation(const Class& cls, const DiscreteMeasure& measure, std::size_t n,
                                       std::size_t trials, std::uint64_t seed, std::size_t jobs = 1) {
  if (trials < 1) throw InvalidArgument("empirical_sup_deviation: need at least one trial");
  if (measure.domain_size() != cls.domain_size()) throw InvalidArgument("empirical_sup_deviation: domain mismatch");
  DeviationStats stats;
  stats.per_trial.assign(trials, 0.0);
  parallel_for(trials, jobs, [&](std::size_t t) {
    const auto sample = sample_iid(measure, n, derive_seed(seed, "ugc-trial", t));
    stats.per_trial[t] = sup_deviation(cls, measure, point_counts(cls.domain_size(), sample), n);
  });
  double sum = 0;
  for (double v : stats.per_trial) sum += v;
  stats.mean = sum / static_cast<double>(trials);
  auto sorted = stats.per_trial;
  std::sort(sorted.begin(), sorted.end());
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) stats.quantiles.emplace_back(p, detail::quantile_of_sorted(sorted, p));
  stats.atom_bound = measure.atom_bound();
  stats.n_atom_bound = static_cast<double>(n) * measure.atom_bound();
  return stats;
}

struct UgcPoint {
  std::size_t n = 0;
  double probability = 0;  // max over the family of the estimated μ^n{sup >= ε}
  double std_error = 0;    // of the maximising estimate
  std::size_t worst_measure = 0;
  std::vector<double> per_measure;
  double atom_bound = 0;   // max over the family
  double n_atom_bound = 0;
};

// Estimated sup over the measure family of μ^n{ sup_C |μ(C) − μ_n(C)| >= ε }, one row per n. Grid
// point (i, k) uses derive_seed(seed, "ugc-curve", i·|family| + k) as its trial seed.
template <class Class>
std::vector<UgcPoint> ugc_curve(const Class& cls, const std::vector<DiscreteMeasure>& family,
                                const std::vector<std::size_t>& n_grid, double epsilon, std::size_t trials,
                                std::uint64_t seed, std::size_t jobs = 1) {
  if (family.empty()) throw InvalidArgument("ugc_curve: empty measure family");
  std::vector<UgcPoint> curve;
  double atom = 0;
  for (const auto& mu : family) atom = std::max(atom, mu.atom_bound());
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    UgcPoint point;
    point.n = n_grid[i];
    point.atom_bound = atom;
    point.n_atom_bound = static_cast<double>(n_grid[i]) * atom;
    for (std::size_t k = 0; k < family.size(); ++k) {
      const auto stats = empirical_sup_deviation(cls, family[k], n_grid[i], trials,
                                                 derive_seed(seed, "ugc-curve", i * family.size() + k), jobs);
      const auto hits = std::count_if(stats.per_trial.begin(), stats.per_trial.end(),
                                      [epsilon](double v) { return v >= epsilon; });
      const double p = static_cast<double>(hits) / static_cast<double>(trials);
      point.per_measure.push_back(p);
      if (k == 0 || p > point.probability) {
        point.probability = p;
        point.worst_measure = k;
        point.std_error = std::sqrt(p * (1 - p) / static_cast<double>(trials));
      }
    }
    curve.push_back(std::move(point));
  }
  return curve;
}

enum class PackingMode { exact, greedy };

struct PackingResult {
  std::size_t count = 0;
  std::vector<std::size_t> witness;  // class indices, pairwise >= separation apart
  bool exact = false;                // false: greedy lower bound
  std::uint64_t nodes = 0;
};

namespace detail {

inline bool separated(const DiscreteMeasure& mu, const Concept& a, const Concept& b, double separation) {
  return symdiff_distance(mu, a, b) >= separation - kDistanceTieTolerance;
}

// Maximum clique by branch and bound with a greedy-colouring bound.
class MaxClique {
 public:
  MaxClique(std::vector<Bitset> adjacency, std::uint64_t max_nodes)
      : adj_(std::move(adjacency)), max_nodes_(max_nodes) {}

  std::vector<std::size_t> solve() {
    Bitset all(adj_.size());
    all.set();
    expand(all);
    return best_;
  }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void expand(Bitset candidates) {
    if (++nodes_ > max_nodes_) {
      throw WorkLimitExceeded("packing_number: clique search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + colour[k] <= best_.size()) return;
      const std::size_t v = order[k];
      current_.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  // Vertices grouped by greedy colour class; colour[k] bounds the clique size within order[0..k].
  void colour_sort(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) {
    Bitset uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset available = uncoloured;
      for (auto v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
        uncoloured.reset(v);
        available -= adj_[v];
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  std::vector<Bitset> adj_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> current_, best_;
};

}  // namespace detail

// Largest set of concepts pairwise at d_μ >= separation (compared with kDistanceTieTolerance slack).
// Exact mode runs a clique search under the node budget; greedy mode scans the class in order and
// keeps every concept separated from those kept so far, a lower bound on the exact value.
inline PackingResult packing_number(const ConceptClass& cls, const DiscreteMeasure& measure, double separation,
                                    PackingMode mode, const SearchLimits& limits = {}) {
  if (!(separation > 0)) throw InvalidArgument("packing_number: separation must be positive");
  if (measure.domain_size() != cls.domain_size()) throw InvalidArgument("packing_number: domain mismatch");
  if (cls.empty()) throw InvalidArgument("packing_number: empty class");
  PackingResult result;
  if (mode == PackingMode::greedy) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const bool ok = std::all_of(result.witness.begin(), result.witness.end(), [&](std::size_t j) {
        return detail::separated(measure, cls[i], cls[j], separation);
      });
      if (ok) result.witness.push_back(i);
    }
    result.count = result.witness.size();
    return result;
  }
  const std::size_t size = cls.size();
  if (static_cast<long double>(size) * size > static_cast<long double>(limits.max_enumeration) * 8) {
    throw WorkLimitExceeded("packing_number: separation graph too large for exact search");
  }
  std::vector<Bitset> adjacency(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (detail::separated(measure, cls[i], cls[j], separation)) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  detail::MaxClique search(std::move(adjacency), limits.max_nodes);
  result.witness = search.solve();
  std::sort(result.witness.begin(), result.witness.end());
  result.count = result.witness.size();
  result.exact = true;
  result.nodes = search.nodes();
  return result;
}

struct PackingBounds {
  std::size_t tail_terms = 0;       // ⌊2εd⌋: the sum runs over k = 0..tail_terms
  long double combinatorial = 0;    // 2^d / Σ_{k<=⌊2εd⌋} C(d, k)
  long double chernoff_okamoto = 0; // exp(2(0.5 − 2ε)² d)
  bool ordered = false;             // combinatorial >= chernoff_okamoto
};

// Lower bounds on the number of 2ε-separated d-bit patterns under normalised Hamming distance. The
// floor of 2εd gets 1e-9 slack so that decimal ε like 0.15 (stored slightly below) rounds as written.
inline PackingBounds packing_lower_bounds(std::size_t d, double epsilon) {
  if (d < 1) throw InvalidArgument("packing_lower_bounds: need d >= 1");
  if (!(epsilon > 0 && epsilon < 0.25)) throw InvalidArgument("packing_lower_bounds: need 0 < epsilon < 0.25");
  PackingBounds b;
  const long double eps = epsilon;
  b.tail_terms = std::min<std::size_t>(d, static_cast<std::size_t>(std::floor(2 * eps * d + 1e-9L)));
  long double tail = 0;
  for (std::size_t k = 0; k <= b.tail_terms; ++k) tail += detail::binomial(d, k);
  b.combinatorial = std::pow(2.0L, static_cast<long double>(d)) / tail;
  const long double gap = 0.5L - 2 * eps;
  b.chernoff_okamoto = std::exp(2 * gap * gap * static_cast<long double>(d));
  b.ordered = b.combinatorial >= b.chernoff_okamoto;
  return b;
}

}  // namespace vcmod
