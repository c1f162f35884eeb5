#pragma once

#include <cstdint>

namespace vcmod {

// Budgets for exact searches. Running out is an error, never a silent approximation.
struct SearchLimits {
  std::uint64_t max_nodes = 200'000'000;        // search-tree nodes
  std::uint64_t max_removal_subsets = 5'000'000;  // C(m, budget) for exact removal
  std::uint64_t max_enumeration = 50'000'000;   // m^n sample sequences, class sizes
};

}  // namespace vcmod
