#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/errors.hpp"

namespace vcmod {

// A finite ground set {0, ..., m-1} with optional distinct labels.
class Domain {
 public:
  explicit Domain(std::size_t size, std::optional<std::vector<std::string>> labels = std::nullopt)
      : size_(size), labels_(std::move(labels)) {
    if (size_ == 0) throw InvalidArgument("domain size must be at least 1");
    if (labels_) {
      if (labels_->size() != size_) {
        throw InvalidArgument("domain has " + std::to_string(size_) + " points but " +
                              std::to_string(labels_->size()) + " labels");
      }
      std::unordered_set<std::string> seen;
      for (const auto& label : *labels_) {
        if (!seen.insert(label).second) throw InvalidArgument("duplicate domain label '" + label + "'");
      }
    }
  }

  std::size_t size() const noexcept { return size_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::size_t size_;
  std::optional<std::vector<std::string>> labels_;
};

struct ValidationReport {
  bool ok = true;
  std::size_t cardinality = 0;  // number of concepts (duplicates included)
  std::size_t distinct = 0;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

// Report-only check of raw rows against a domain.
inline ValidationReport validate_class(const Domain& domain, const std::vector<Concept>& concepts,
                                       bool dedup) {
  ValidationReport report;
  report.cardinality = concepts.size();
  std::unordered_set<Concept> seen;
  std::size_t duplicates = 0;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (concepts[i].size() != domain.size()) {
      report.ok = false;
      report.violations.push_back("concept " + std::to_string(i) + " has length " +
                                  std::to_string(concepts[i].size()) + ", expected " +
                                  std::to_string(domain.size()));
      continue;
    }
    if (!seen.insert(concepts[i]).second) ++duplicates;
  }
  report.distinct = seen.size();
  if (duplicates > 0) {
    std::string msg = std::to_string(duplicates) + " duplicate concept(s)";
    if (dedup) {
      report.ok = false;
      report.violations.push_back(msg + " in a class marked deduplicated");
    } else {
      report.warnings.push_back(msg);
    }
  }
  return report;
}

// A finite ordered family of concepts over one domain. The order is the enumeration order used by
// the learners, so duplicates are kept unless deduplication is requested.
class ConceptClass {
 public:
  ConceptClass(Domain domain, std::vector<Concept> concepts, bool dedup = false)
      : domain_(std::move(domain)), dedup_(dedup) {
    if (dedup_) {
      std::unordered_set<Concept> seen;
      for (auto& c : concepts) {
        if (c.size() == domain_.size() && !seen.insert(c).second) continue;
        concepts_.push_back(std::move(c));
      }
    } else {
      concepts_ = std::move(concepts);
    }
    auto report = validate_class(domain_, concepts_, dedup_);
    if (!report.ok) throw InvalidArgument(report.violations.front());
  }

  const Domain& domain() const noexcept { return domain_; }
  std::size_t domain_size() const noexcept { return domain_.size(); }
  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  const Concept& operator[](std::size_t i) const { return concepts_.at(i); }
  std::size_t size() const noexcept { return concepts_.size(); }
  bool empty() const noexcept { return concepts_.empty(); }
  bool deduplicated() const noexcept { return dedup_; }

  friend bool operator==(const ConceptClass&, const ConceptClass&) = default;

 private:
  Domain domain_;
  std::vector<Concept> concepts_;
  bool dedup_;
};

inline ValidationReport validate_class(const ConceptClass& cls) {
  return validate_class(cls.domain(), cls.concepts(), cls.deduplicated());
}

// The ideal of all subsets of a negligible set N. Every ideal of subsets of a finite set has this form.
class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(Concept negligible) : negligible_(std::move(negligible)) {}

  const Concept& negligible() const noexcept { return negligible_; }
  bool contains(const PointSet& set) const {
    if (set.size() != negligible_.size()) throw InvalidArgument("ideal membership: domain mismatch");
    return set.is_subset_of(negligible_);
  }

 private:
  Concept negligible_;
};

// Pairwise-disjoint clusters, each of at least min_size points.
class ClusterFamily {
 public:
  ClusterFamily(std::vector<PointSet> clusters, std::size_t min_size)
      : clusters_(std::move(clusters)), min_size_(min_size) {
    if (min_size_ == 0) throw InvalidArgument("cluster min_size must be positive");
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
      if (clusters_[i].size() != clusters_.front().size()) {
        throw InvalidArgument("clusters lie over different domains");
      }
      if (clusters_[i].count() < min_size_) {
        throw InvalidArgument("cluster " + std::to_string(i) + " has " +
                              std::to_string(clusters_[i].count()) + " points, below min_size " +
                              std::to_string(min_size_));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (clusters_[i].intersects(clusters_[j])) {
          throw InvalidArgument("clusters " + std::to_string(j) + " and " + std::to_string(i) +
                                " are not disjoint");
        }
      }
    }
  }

  const std::vector<PointSet>& clusters() const noexcept { return clusters_; }
  std::size_t size() const noexcept { return clusters_.size(); }
  std::size_t min_size() const noexcept { return min_size_; }
  const PointSet& operator[](std::size_t i) const { return clusters_.at(i); }

 private:
  std::vector<PointSet> clusters_;
  std::size_t min_size_;
};

// Project every concept onto the kept points (in increasing order). Concept order is preserved and
// duplicates created by the projection are kept, so indices still refer to the original class.
inline ConceptClass restrict(const ConceptClass& cls, const PointSet& keep) {
  if (keep.size() != cls.domain_size()) throw InvalidArgument("restrict: domain mismatch");
  const auto kept = bits_to_indices(keep);
  if (kept.empty()) throw InvalidArgument("restrict: empty sub-domain");
  std::optional<std::vector<std::string>> labels;
  if (cls.domain().labels()) {
    labels.emplace();
    for (Point p : kept) labels->push_back((*cls.domain().labels())[p]);
  }
  std::vector<Concept> projected;
  projected.reserve(cls.size());
  for (const auto& c : cls.concepts()) {
    Concept r(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) r[j] = c[kept[j]];
    projected.push_back(std::move(r));
  }
  return ConceptClass(Domain(kept.size(), std::move(labels)), std::move(projected), false);
}

}  // namespace vcmod
