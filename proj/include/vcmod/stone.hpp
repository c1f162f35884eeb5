#pragma once

// Finite Boolean-algebra side of the VC-modulo-ideal computation.
//
// The subalgebra of 2^Ω generated by finitely many sets is finite; its atoms are the classes of
// points that agree on every generator. Every ultrafilter on a finite Boolean algebra is principal,
// generated by a single atom, so the Stone space is the set of atoms. For the quotient by ↓N the
// Stone points are the ultrafilters containing no subset of N, i.e. the atoms not contained in N.
// A concept C (a generator, hence a union of atoms) belongs to the ultrafilter of atom a iff a ⊆ C.
//
// There is no finite counterpart of a free ultrafilter, so only statements (not proof routes) that
// pass through βΩ \ Ω are checked here.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/limits.hpp"
#include "vcmod/shattering.hpp"

namespace vcmod {

struct AtomPartition {
  std::vector<PointSet> blocks;  // sorted by least element
};

struct QuotientSpace {
  AtomPartition partition;
  std::vector<std::size_t> surviving;  // indices of blocks not contained in N
};

// Points share a block iff they agree on membership in every generator.
inline AtomPartition generated_partition(std::size_t domain_size, const std::vector<Concept>& generators) {
  if (domain_size == 0) throw InvalidArgument("generated_partition: empty domain");
  for (const auto& g : generators) {
    if (g.size() != domain_size) throw InvalidArgument("generated_partition: generator over wrong domain");
  }
  std::unordered_map<Bitset, std::size_t> block_of_signature;
  AtomPartition partition;
  for (Point x = 0; x < domain_size; ++x) {
    Bitset signature(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) signature[g] = generators[g][x];
    auto [it, fresh] = block_of_signature.try_emplace(std::move(signature), partition.blocks.size());
    if (fresh) partition.blocks.emplace_back(domain_size);
    partition.blocks[it->second].set(x);
  }
  return partition;
}

inline QuotientSpace quotient_space(const ConceptClass& cls, const PrincipalIdeal& ideal) {
  auto generators = cls.concepts();
  generators.push_back(ideal.negligible());
  QuotientSpace q{generated_partition(cls.domain_size(), generators), {}};
  for (std::size_t b = 0; b < q.partition.blocks.size(); ++b) {
    if (!ideal.contains(q.partition.blocks[b])) q.surviving.push_back(b);
  }
  return q;
}

struct StoneResult {
  std::size_t vc = 0;
  QuotientSpace quotient;
  std::vector<std::size_t> shattered_atoms;  // block indices of the witness
  std::vector<std::size_t> carvers;          // concept indices of the original class
};

// Classical VC dimension of the class traced on the Stone points of 2^Ω/↓N.
inline StoneResult vc_on_stone(const ConceptClass& cls, const PrincipalIdeal& ideal,
                               const SearchLimits& limits = {}) {
  if (cls.empty()) throw InvalidArgument("vc_on_stone: empty class");
  if (ideal.negligible().size() != cls.domain_size()) throw InvalidArgument("vc_on_stone: domain mismatch");
  StoneResult result;
  result.quotient = quotient_space(cls, ideal);
  const auto& surviving = result.quotient.surviving;
  if (surviving.empty()) {
    result.carvers = {0};
    return result;
  }
  std::vector<Concept> induced;
  induced.reserve(cls.size());
  for (const auto& c : cls.concepts()) {
    Concept on_atoms(surviving.size());
    for (std::size_t s = 0; s < surviving.size(); ++s) {
      on_atoms[s] = result.quotient.partition.blocks[surviving[s]].is_subset_of(c);
    }
    induced.push_back(std::move(on_atoms));
  }
  const ConceptClass stone_class(Domain(surviving.size()), std::move(induced), false);
  auto vc = vc_dimension(stone_class, limits);
  result.vc = vc.vc;
  for (Point p : vc.certificate.points) result.shattered_atoms.push_back(surviving[p]);
  result.carvers = std::move(vc.certificate.carvers);
  return result;
}

// Pull a shattered set of Stone points back to a strongly shattered family on Ω.
inline ClusterFamily lift_witness(const ConceptClass& cls, const QuotientSpace& quotient,
                                  const std::vector<std::size_t>& atoms,
                                  const std::vector<std::size_t>& carvers) {
  if (carvers.size() != (std::size_t{1} << atoms.size())) {
    throw InvalidArgument("lift_witness: need 2^n carvers for n atoms");
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i] >= quotient.partition.blocks.size()) throw InvalidArgument("lift_witness: bad atom index");
    const auto& atom = quotient.partition.blocks[atoms[i]];
    for (Pattern j = 0; j < carvers.size(); ++j) {
      if (carvers[j] >= cls.size()) throw InvalidArgument("lift_witness: carver index out of range");
      const bool inside = atom.is_subset_of(cls[carvers[j]]);
      const bool outside = !atom.intersects(cls[carvers[j]]);
      if ((j >> i & 1) ? !inside : !outside) {
        throw InvalidArgument("lift_witness: carvers do not carve the given atoms");
      }
    }
  }
  if (atoms.empty()) return ClusterFamily({}, 1);
  return canonical_witness(cls, carvers);
}

}  // namespace vcmod
