#pragma once

// Exact shattering computations: classical VC dimension, strong shattering of cluster families,
// thick VC dimension, VC dimension modulo a principal ideal, and VC after point removal.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/limits.hpp"

namespace vcmod {

// Patterns J are bitmasks over witness positions: bit i set <=> the i-th witness element is carved in.
using Pattern = std::uint64_t;

struct ShatterCertificate {
  std::vector<Point> points;            // classical witness (sorted); empty for family witnesses
  std::optional<ClusterFamily> family;  // strong/thick witness
  std::vector<std::size_t> carvers;     // carvers[J] = least concept index realising pattern J
};

struct VcResult {
  std::size_t vc = 0;
  ShatterCertificate certificate;
  std::uint64_t nodes = 0;  // search nodes visited
  std::string note;
};

namespace detail {

inline void require_nonempty(const ConceptClass& cls) {
  if (cls.empty()) throw InvalidArgument("VC dimension of an empty class is undefined");
}

// Distinct-value counter over [0, 2^k) without clearing between rounds.
class PatternCounter {
 public:
  void reset(std::size_t width) {
    const std::size_t need = std::size_t{1} << width;
    if (stamp_.size() < need) stamp_.assign(need, 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    distinct_ = 0;
  }
  void add(Pattern p) {
    if (stamp_[p] != epoch_) {
      stamp_[p] = epoch_;
      ++distinct_;
    }
  }
  std::size_t distinct() const noexcept { return distinct_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::size_t distinct_ = 0;
};

// Indices of first occurrences of each distinct concept, in class order.
inline std::vector<std::size_t> distinct_representatives(const ConceptClass& cls) {
  std::unordered_map<Concept, std::size_t> first;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (first.emplace(cls[i], i).second) reps.push_back(i);
  }
  return reps;
}

inline std::size_t floor_log2(std::size_t x) { return x == 0 ? 0 : std::bit_width(x) - 1; }

// Least concept index realising each pattern; patterns[i] is the pattern of concept i, or nullopt.
inline std::vector<std::size_t> least_carvers(const std::vector<std::optional<Pattern>>& patterns,
                                              std::size_t width) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> carvers(std::size_t{1} << width, none);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i] && carvers[*patterns[i]] == none) carvers[*patterns[i]] = i;
  }
  return carvers;
}

}  // namespace detail

// Number of distinct traces C ∩ points over the class.
inline std::size_t trace_count(const ConceptClass& cls, const std::vector<Point>& points) {
  for (Point p : points) {
    if (p >= cls.domain_size()) {
      throw InvalidArgument("trace_count: point " + std::to_string(p) + " outside domain");
    }
  }
  if (points.size() <= 64) {
    std::vector<Pattern> traces;
    traces.reserve(cls.size());
    for (const auto& c : cls.concepts()) {
      Pattern t = 0;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (c[points[j]]) t |= Pattern{1} << j;
      }
      traces.push_back(t);
    }
    std::sort(traces.begin(), traces.end());
    return static_cast<std::size_t>(std::unique(traces.begin(), traces.end()) - traces.begin());
  }
  std::vector<Bitset> traces;
  for (const auto& c : cls.concepts()) {
    Bitset t(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) t[j] = c[points[j]];
    traces.push_back(std::move(t));
  }
  std::sort(traces.begin(), traces.end());
  return static_cast<std::size_t>(std::unique(traces.begin(), traces.end()) - traces.begin());
}

// Classical VC dimension of the class traced on a sub-domain (original point indices). Shattered
// sets are down-closed, so a depth-first walk that only extends shattered sets with larger points
// visits each shattered set exactly once, in lexicographic order; the first largest one found is
// the lexicographically least witness.
inline VcResult vc_dimension_on(const ConceptClass& cls, const PointSet& sub_domain,
                                const SearchLimits& limits = {}) {
  detail::require_nonempty(cls);
  if (sub_domain.size() != cls.domain_size()) throw InvalidArgument("vc_dimension_on: domain mismatch");
  const auto candidates = bits_to_indices(sub_domain);
  const auto reps = detail::distinct_representatives(cls);
  const std::size_t upper = std::min(candidates.size(), detail::floor_log2(reps.size()));

  VcResult result;
  std::vector<Point> current;
  std::vector<Point> best;
  detail::PatternCounter counter;

  // patterns[r] = trace of concept reps[r] on `current`.
  auto search = [&](auto&& self, std::size_t next, const std::vector<Pattern>& patterns) -> void {
    const std::size_t k = current.size();
    if (k >= upper) return;
    for (std::size_t pos = next; pos < candidates.size(); ++pos) {
      if (best.size() >= upper) return;
      if (++result.nodes > limits.max_nodes) {
        throw WorkLimitExceeded("vc_dimension: node budget " + std::to_string(limits.max_nodes) +
                                " exceeded");
      }
      const Point p = candidates[pos];
      std::vector<Pattern> extended(patterns.size());
      counter.reset(k + 1);
      for (std::size_t r = 0; r < reps.size(); ++r) {
        extended[r] = patterns[r] | (cls[reps[r]][p] ? Pattern{1} << k : Pattern{0});
        counter.add(extended[r]);
      }
      if (counter.distinct() != (std::size_t{1} << (k + 1))) continue;
      current.push_back(p);
      if (current.size() > best.size()) best = current;
      self(self, pos + 1, extended);
      current.pop_back();
    }
  };
  search(search, 0, std::vector<Pattern>(reps.size(), 0));

  result.vc = best.size();
  result.certificate.points = best;
  std::vector<std::optional<Pattern>> patterns(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    Pattern t = 0;
    for (std::size_t j = 0; j < best.size(); ++j) {
      if (cls[i][best[j]]) t |= Pattern{1} << j;
    }
    patterns[i] = t;
  }
  result.certificate.carvers = detail::least_carvers(patterns, best.size());
  return result;
}

inline VcResult vc_dimension(const ConceptClass& cls, const SearchLimits& limits = {}) {
  detail::require_nonempty(cls);
  return vc_dimension_on(cls, full_set(cls.domain_size()), limits);
}

struct StrongShatterResult {
  bool shattered = false;
  std::vector<std::size_t> carvers;  // filled only when shattered
};

// For every J some concept contains the clusters indexed by J and misses all the others.
inline StrongShatterResult is_strongly_shattered(const ConceptClass& cls, const ClusterFamily& family) {
  const std::size_t n = family.size();
  if (n > 62) throw InvalidArgument("is_strongly_shattered: family too large");
  for (const auto& a : family.clusters()) {
    if (a.size() != cls.domain_size()) throw InvalidArgument("is_strongly_shattered: domain mismatch");
  }
  std::vector<std::optional<Pattern>> patterns(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) {
    Pattern p = 0;
    bool uniform = true;
    for (std::size_t i = 0; i < n && uniform; ++i) {
      const auto& a = family[i];
      if (a.is_subset_of(cls[c])) {
        p |= Pattern{1} << i;
      } else if (a.intersects(cls[c])) {
        uniform = false;
      }
    }
    if (uniform) patterns[c] = p;
  }
  auto carvers = detail::least_carvers(patterns, n);
  StrongShatterResult result;
  result.shattered = std::none_of(carvers.begin(), carvers.end(),
                                  [](std::size_t c) { return c == static_cast<std::size_t>(-1); });
  if (result.shattered) result.carvers = std::move(carvers);
  return result;
}

namespace detail {

// Largest strongly shattered family drawn from a pool of candidate clusters. Subfamilies of a
// strongly shattered family are strongly shattered, so the walk only extends shattered families.
// Families are generated with increasing pool index; with the pool in lexicographic order the first
// largest family found is the lexicographically least.
inline VcResult max_strong_family(const ConceptClass& cls, const std::vector<PointSet>& pool,
                                  std::size_t min_size, const SearchLimits& limits) {
  require_nonempty(cls);
  const auto reps = distinct_representatives(cls);
  const std::size_t m = cls.domain_size();

  // status[k][r]: 1 cluster inside concept, 0 disjoint, 2 mixed.
  std::vector<std::vector<std::uint8_t>> status(pool.size(), std::vector<std::uint8_t>(reps.size()));
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    bool inside = false, outside = false;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const auto& c = cls[reps[r]];
      std::uint8_t s = pool[k].is_subset_of(c) ? 1 : (pool[k].intersects(c) ? 2 : 0);
      status[k][r] = s;
      inside |= s == 1;
      outside |= s == 0;
    }
    // A cluster no concept both contains and misses cannot appear in any nonempty family.
    if (inside && outside) usable.push_back(k);
  }

  const std::size_t upper = std::min(floor_log2(reps.size()), m / std::max<std::size_t>(min_size, 1));
  VcResult result;
  std::vector<std::size_t> current, best;
  PatternCounter counter;
  constexpr Pattern kDead = ~Pattern{0};

  auto search = [&](auto&& self, std::size_t next, const std::vector<Pattern>& patterns,
                    const PointSet& used) -> void {
    const std::size_t k = current.size();
    if (k >= upper) return;
    for (std::size_t pos = next; pos < usable.size(); ++pos) {
      if (best.size() >= upper) return;
      const auto& cluster = pool[usable[pos]];
      if (cluster.intersects(used)) continue;
      if (++result.nodes > limits.max_nodes) {
        throw WorkLimitExceeded("strong-shattering search: node budget " +
                                std::to_string(limits.max_nodes) + " exceeded");
      }
      const auto& st = status[usable[pos]];
      std::vector<Pattern> extended(patterns.size(), kDead);
      counter.reset(k + 1);
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (patterns[r] == kDead || st[r] == 2) continue;
        extended[r] = patterns[r] | (st[r] == 1 ? Pattern{1} << k : Pattern{0});
        counter.add(extended[r]);
      }
      if (counter.distinct() != (std::size_t{1} << (k + 1))) continue;
      current.push_back(usable[pos]);
      if (current.size() > best.size()) best = current;
      self(self, pos + 1, extended, used | cluster);
      current.pop_back();
    }
  };
  search(search, 0, std::vector<Pattern>(reps.size(), 0), PointSet(m));

  std::vector<PointSet> clusters;
  for (auto k : best) clusters.push_back(pool[k]);
  ClusterFamily family(std::move(clusters), std::max<std::size_t>(min_size, 1));
  auto check = is_strongly_shattered(cls, family);
  result.vc = best.size();
  result.certificate.carvers = std::move(check.carvers);
  result.certificate.family = std::move(family);
  return result;
}

// All k-subsets of {0..m-1} in lexicographic order.
inline std::vector<PointSet> k_subsets(std::size_t m, std::size_t k, const SearchLimits& limits) {
  std::vector<PointSet> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (out.size() >= limits.max_enumeration) {
      throw WorkLimitExceeded("cluster pool exceeds " + std::to_string(limits.max_enumeration));
    }
    out.push_back(bits_from_indices(m, idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace detail

// Largest n admitting n disjoint clusters of >= min_size points strongly shattered by the class.
// Shrinking a cluster keeps a family strongly shattered, so only clusters of exactly min_size
// points are searched.
inline VcResult vc_thick(const ConceptClass& cls, std::size_t min_size, const SearchLimits& limits = {}) {
  detail::require_nonempty(cls);
  if (min_size == 0) throw InvalidArgument("vc_thick: min_size must be positive");
  const std::size_t m = cls.domain_size();
  if (min_size > m) {
    VcResult r;
    r.certificate.family = ClusterFamily({}, min_size);
    r.certificate.carvers = {0};
    r.note = "min_size " + std::to_string(min_size) + " exceeds domain size " + std::to_string(m) +
             "; no cluster fits";
    return r;
  }
  return detail::max_strong_family(cls, detail::k_subsets(m, min_size, limits), min_size, limits);
}

// Largest strongly shattered family whose clusters all escape the negligible set N. Candidate
// clusters are the twin classes of the class (points no concept separates) not contained in N:
// any admissible family can be replaced by the twin classes of representatives outside N without
// losing a carver.
inline VcResult vc_mod_ideal(const ConceptClass& cls, const PrincipalIdeal& ideal,
                             const SearchLimits& limits = {}) {
  detail::require_nonempty(cls);
  const std::size_t m = cls.domain_size();
  if (ideal.negligible().size() != m) throw InvalidArgument("vc_mod_ideal: domain mismatch");
  std::map<Bitset, PointSet> twins;  // column over concepts -> points sharing it
  for (Point x = 0; x < m; ++x) {
    Bitset column(cls.size());
    for (std::size_t c = 0; c < cls.size(); ++c) column[c] = cls[c][x];
    auto [it, fresh] = twins.try_emplace(std::move(column), PointSet(m));
    it->second.set(x);
  }
  std::vector<PointSet> pool;
  for (auto& [column, points] : twins) {
    if (!ideal.contains(points)) pool.push_back(std::move(points));
  }
  std::sort(pool.begin(), pool.end(), lex_less);
  return detail::max_strong_family(cls, pool, 1, limits);
}

enum class RemovalMode { exact, greedy };

struct RemovalResult {
  std::size_t vc = 0;
  PointSet removed;
  bool heuristic = false;   // greedy: an upper bound only
  std::uint64_t evaluations = 0;
};

// min over |N| <= budget of VC(class restricted to Ω \ N). Restriction never increases VC, so the
// exact minimum is attained by some N of size exactly budget.
inline RemovalResult vc_after_removal(const ConceptClass& cls, std::size_t budget, RemovalMode mode,
                                      const SearchLimits& limits = {}) {
  detail::require_nonempty(cls);
  const std::size_t m = cls.domain_size();
  if (budget > m) throw InvalidArgument("vc_after_removal: budget exceeds domain size");
  RemovalResult result;
  result.removed = PointSet(m);
  const PointSet all = full_set(m);

  if (mode == RemovalMode::greedy) {
    result.heuristic = true;
    result.vc = vc_dimension_on(cls, all, limits).vc;
    ++result.evaluations;
    for (std::size_t step = 0; step < budget && result.vc > 0; ++step) {
      std::size_t best_vc = static_cast<std::size_t>(-1);
      Point best_point = kNoPoint;
      for (Point x = 0; x < m; ++x) {
        if (result.removed[x]) continue;
        PointSet trial = result.removed;
        trial.set(x);
        const auto vc = vc_dimension_on(cls, ~trial, limits).vc;
        ++result.evaluations;
        if (vc < best_vc) {
          best_vc = vc;
          best_point = x;
        }
      }
      result.removed.set(best_point);
      result.vc = best_vc;
    }
    return result;
  }

  // C(m, budget) with saturation.
  long double subsets = 1;
  for (std::size_t i = 0; i < budget; ++i) subsets = subsets * (m - i) / (i + 1);
  if (subsets > static_cast<long double>(limits.max_removal_subsets)) {
    throw WorkLimitExceeded("vc_after_removal: C(" + std::to_string(m) + ", " + std::to_string(budget) +
                            ") subsets exceed limit " + std::to_string(limits.max_removal_subsets));
  }
  if (budget == m) {
    result.removed = all;
    return result;
  }
  result.vc = static_cast<std::size_t>(-1);
  std::vector<std::size_t> idx(budget);
  for (std::size_t i = 0; i < budget; ++i) idx[i] = i;
  while (true) {
    const PointSet removed = bits_from_indices(m, idx);
    const auto vc = vc_dimension_on(cls, ~removed, limits).vc;
    ++result.evaluations;
    if (vc < result.vc) {
      result.vc = vc;
      result.removed = removed;
      if (vc == 0) break;
    }
    std::size_t i = budget;
    while (i > 0 && idx[i - 1] == m - budget + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < budget; ++j) idx[j] = idx[j - 1] + 1;
  }
  return result;
}

// A_i = ⋂_{J∋i} C_J ∩ ⋂_{J∌i} C_J^c for carvers indexed by pattern J (2^n entries).
inline ClusterFamily canonical_witness(const ConceptClass& cls, const std::vector<std::size_t>& carvers) {
  if (carvers.empty() || !std::has_single_bit(carvers.size())) {
    throw InvalidArgument("canonical_witness: need 2^n carvers, got " + std::to_string(carvers.size()));
  }
  const std::size_t n = static_cast<std::size_t>(std::countr_zero(carvers.size()));
  for (auto c : carvers) {
    if (c >= cls.size()) throw InvalidArgument("canonical_witness: carver index out of range");
  }
  std::vector<PointSet> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    PointSet a = full_set(cls.domain_size());
    for (Pattern j = 0; j < carvers.size(); ++j) {
      if (j >> i & 1) {
        a &= cls[carvers[j]];
      } else {
        a -= cls[carvers[j]];
      }
    }
    if (a.none()) throw EmptyWitness(i);
    clusters.push_back(std::move(a));
  }
  return ClusterFamily(std::move(clusters), 1);
}

}  // namespace vcmod
