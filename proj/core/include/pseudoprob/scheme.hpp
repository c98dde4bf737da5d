#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pseudoprob/pseudo_projection.hpp"
#include "pseudoprob/states.hpp"

namespace pseudoprob {

/// Classicality tolerance: an entry counts as negative below -kClassicalEps.
inline constexpr double kClassicalEps = 1e-10;
/// Normalization tolerance for the sum of all entries.
inline constexpr double kNormalizationTolerance = 1e-10;
/// Largest event space accepted by minimal_coarse_graining.
inline constexpr std::size_t kMaxCoarseGrainingEvents = 16;

struct SchemeEntry {
  /// Index into each observable's resolution.
  std::vector<std::size_t> index;
  /// Outcome values a_i, one per observable.
  std::vector<double> outcomes;
  double p;
};

/// Complete table of pseudo-probabilities for a state and a list of
/// observables. Entries are stored in canonical order: lexicographic in the
/// resolution indices, first observable slowest. For qubit observables the
/// resolution is (+1, -1), so +1 comes first in every slot.
class Scheme {
 public:
  /// Checks the entry count, normalization (1e-10) and the [-1, 2] sanity
  /// bound. Throws not-normalized / invalid-argument.
  Scheme(std::vector<Observable> observables, std::vector<SchemeEntry> entries,
         OrderingRecipe recipe, DensityMatrix state);

  const std::vector<Observable>& observables() const noexcept { return observables_; }
  const std::vector<SchemeEntry>& entries() const noexcept { return entries_; }
  const OrderingRecipe& recipe() const noexcept { return recipe_; }
  const DensityMatrix& state() const noexcept { return state_; }

  std::size_t size() const noexcept { return entries_.size(); }
  std::vector<double> values() const;
  /// Entry whose resolution indices are `index`.
  const SchemeEntry& at(std::span<const std::size_t> index) const;
  /// Linear position of a resolution-index tuple in canonical order.
  std::size_t position(std::span<const std::size_t> index) const;

 private:
  std::vector<Observable> observables_;
  std::vector<SchemeEntry> entries_;
  OrderingRecipe recipe_;
  DensityMatrix state_;
};

/// Every resolution-index tuple for the given outcome counts, canonical order.
std::vector<std::vector<std::size_t>> canonical_tuples(std::span<const std::size_t> outcome_counts);

/// Entry = Re Tr(rho Pi) with Pi the recipe's pseudo-projection of the
/// tuple's projectors. Unit indices and weights refer to ordering_classes(N).
Scheme build_scheme(const DensityMatrix& rho, std::span<const Observable> observables,
                    const OrderingRecipe& recipe);

/// Sum out every observable not listed in `keep` (indices, any order, no
/// repeats). The result lists the kept observables in ascending index order.
Scheme marginal(const Scheme& s, std::span<const std::size_t> keep);

/// (sum |P_i| - 1)/2, clamped at zero.
double negativity(const Scheme& s);

struct NegativeEntry {
  std::size_t position;
  std::vector<double> outcomes;
  double p;
};

struct Classification {
  bool classical;
  /// Sorted by value, most negative first.
  std::vector<NegativeEntry> negative_entries;
};

Classification classify(const Scheme& s, double eps = kClassicalEps);

struct Partition {
  /// Each block lists entry positions ascending; blocks are ordered by their
  /// first element.
  std::vector<std::vector<std::size_t>> blocks;
};

struct CoarseGraining {
  Partition partition;
  std::size_t block_count;
  /// Number of distinct partitions reaching block_count.
  std::uint64_t maximizer_count;
};

/// Finest partition of the event space whose blocks all have sum >= -eps.
/// Exact search (subset dynamic programming). Among maximizers the one whose
/// block sequence is lexicographically smallest is returned.
CoarseGraining minimal_coarse_graining(std::span<const double> entries, double eps = kClassicalEps);
CoarseGraining minimal_coarse_graining(const Scheme& s, double eps = kClassicalEps);

}  // namespace pseudoprob
