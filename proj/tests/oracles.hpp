#pragma once

// Brute-force reference implementations. They work on plain uint32 masks over small domains and
// share no code with the library beyond reading concepts out of a ConceptClass.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "vcmod/domain.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> masks(const vcmod::ConceptClass& cls) {
  std::vector<Mask> out;
  for (const auto& c : cls.concepts()) out.push_back(static_cast<Mask>(c.to_ulong()));
  return out;
}

inline Mask mask_of(const vcmod::Bitset& bits) { return static_cast<Mask>(bits.to_ulong()); }

inline bool shatters(const std::vector<Mask>& cls, Mask set) {
  std::set<Mask> traces;
  for (Mask c : cls) traces.insert(c & set);
  return traces.size() == (std::size_t{1} << std::popcount(set));
}

// Largest shattered subset of `within`, trying every subset.
inline std::size_t vc(const std::vector<Mask>& cls, Mask within) {
  std::size_t best = 0;
  for (Mask s = within;; s = (s - 1) & within) {
    if (static_cast<std::size_t>(std::popcount(s)) > best && shatters(cls, s)) best = std::popcount(s);
    if (s == 0) break;
  }
  return best;
}

inline std::size_t vc(const vcmod::ConceptClass& cls) {
  return vc(masks(cls), static_cast<Mask>((std::uint64_t{1} << cls.domain_size()) - 1));
}

// Every pattern J over the family is realised by a concept containing the chosen sets and missing
// the rest.
inline bool strongly_shattered(const std::vector<Mask>& cls, const std::vector<Mask>& family) {
  const std::size_t k = family.size();
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j) {
    bool found = false;
    for (Mask c : cls) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = (j >> i & 1) ? (family[i] & ~c) == 0 : (family[i] & c) == 0;
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Largest strongly shattered family of pairwise disjoint nonempty sets satisfying `admissible`.
// Families are built with strictly increasing least elements, so each is visited once, and every
// admissible set of the remaining points is tried at every level.
inline std::size_t max_family(const std::vector<Mask>& cls, std::size_t m,
                              const std::function<bool(Mask)>& admissible) {
  std::vector<Mask> candidates;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    if (admissible(s)) candidates.push_back(s);
  }
  std::size_t best = 0;
  std::vector<Mask> family;
  std::function<void(Mask, int)> grow = [&](Mask used, int last_low) {
    if (strongly_shattered(cls, family)) {
      best = std::max(best, family.size());
    } else {
      return;  // a family containing an unshattered one is unshattered
    }
    for (Mask s : candidates) {
      const int low = std::countr_zero(s);
      if (low <= last_low || (s & used) != 0) continue;
      family.push_back(s);
      grow(used | s, low);
      family.pop_back();
    }
  };
  grow(0, -1);
  return best;
}

inline std::size_t vc_thick(const vcmod::ConceptClass& cls, std::size_t min_size) {
  return max_family(masks(cls), cls.domain_size(),
                    [&](Mask s) { return static_cast<std::size_t>(std::popcount(s)) >= min_size; });
}

inline std::size_t vc_mod(const vcmod::ConceptClass& cls, Mask negligible) {
  return max_family(masks(cls), cls.domain_size(), [&](Mask s) { return (s & ~negligible) != 0; });
}

// min over |N| <= budget of VC on the remaining points.
inline std::size_t vc_after_removal(const vcmod::ConceptClass& cls, std::size_t budget) {
  const std::size_t m = cls.domain_size();
  const Mask all = static_cast<Mask>((std::uint64_t{1} << m) - 1);
  const auto c = masks(cls);
  std::size_t best = vc(c, all);
  for (Mask n = 0; n <= all; ++n) {
    if (static_cast<std::size_t>(std::popcount(n)) <= budget) best = std::min(best, vc(c, all & ~n));
    if (n == all) break;
  }
  return best;
}

// Pascal's triangle in exact integers.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return k > n ? 0 : row[k];
}

inline std::uint64_t binomial_tail(unsigned n, unsigned upto) {
  std::uint64_t sum = 0;
  for (unsigned k = 0; k <= std::min(n, upto); ++k) sum += binomial(n, k);
  return sum;
}

}  // namespace oracle
