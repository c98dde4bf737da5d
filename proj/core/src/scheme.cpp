#include "pseudoprob/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

std::vector<std::size_t> outcome_counts_of(std::span<const Observable> observables) {
  std::vector<std::size_t> counts;
  counts.reserve(observables.size());
  for (const auto& o : observables) counts.push_back(o.outcome_count());
  return counts;
}

}  // namespace

std::vector<std::vector<std::size_t>> canonical_tuples(std::span<const std::size_t> outcome_counts) {
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current(outcome_counts.size(), 0);
  if (std::find(outcome_counts.begin(), outcome_counts.end(), 0u) != outcome_counts.end()) return tuples;
  while (true) {
    tuples.push_back(current);
    std::size_t slot = current.size();
    while (slot > 0) {
      --slot;
      if (++current[slot] < outcome_counts[slot]) break;
      current[slot] = 0;
      if (slot == 0) return tuples;
    }
    if (current.empty()) return tuples;
  }
}

Scheme::Scheme(std::vector<Observable> observables, std::vector<SchemeEntry> entries,
               OrderingRecipe recipe, DensityMatrix state)
    : observables_(std::move(observables)),
      entries_(std::move(entries)),
      recipe_(std::move(recipe)),
      state_(std::move(state)) {
  if (observables_.empty()) throw Error(errc::kInvalidArgument, "scheme needs at least one observable");
  std::size_t expected = 1;
  for (const auto& o : observables_) expected *= o.outcome_count();
  if (entries_.size() != expected) {
    throw Error(errc::kInvalidArgument, "scheme has " + std::to_string(entries_.size()) +
                                            " entries, expected " + std::to_string(expected));
  }
  double total = 0.0;
  for (const auto& e : entries_) {
    if (!std::isfinite(e.p) || e.p < -1.0 || e.p > 2.0) {
      throw Error(errc::kOutOfRange, "scheme entry " + std::to_string(e.p) + " outside [-1, 2]");
    }
    total += e.p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(errc::kNotNormalized, "scheme entries sum to " + std::to_string(total));
  }
}

std::vector<double> Scheme::values() const {
  std::vector<double> v;
  v.reserve(entries_.size());
  for (const auto& e : entries_) v.push_back(e.p);
  return v;
}

std::size_t Scheme::position(std::span<const std::size_t> index) const {
  if (index.size() != observables_.size()) throw Error(errc::kInvalidArgument, "tuple length mismatch");
  std::size_t pos = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    const std::size_t count = observables_[k].outcome_count();
    if (index[k] >= count) throw Error(errc::kOutOfRange, "resolution index out of range");
    pos = pos * count + index[k];
  }
  return pos;
}

const SchemeEntry& Scheme::at(std::span<const std::size_t> index) const {
  return entries_[position(index)];
}

Scheme build_scheme(const DensityMatrix& rho, std::span<const Observable> observables,
                    const OrderingRecipe& recipe) {
  if (observables.empty()) throw Error(errc::kInvalidArgument, "build_scheme needs observables");
  if (observables.size() > kMaxGenerators) {
    throw Error(errc::kOrderingExplosion, std::to_string(observables.size()) + " observables");
  }
  for (const auto& o : observables) {
    if (o.dim() != rho.dim()) {
      throw Error(errc::kDimMismatch, "observable dim " + std::to_string(o.dim()) +
                                          " vs state dim " + std::to_string(rho.dim()));
    }
  }
  recipe.validate(ordering_classes(observables.size()).size());

  const auto counts = outcome_counts_of(observables);
  std::vector<SchemeEntry> entries;
  std::vector<HermitianOperator> projs;
  for (auto& tuple : canonical_tuples(counts)) {
    projs.clear();
    std::vector<double> outcomes;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      const auto& term = observables[k].resolution()[tuple[k]];
      projs.push_back(term.projector);
      outcomes.push_back(term.outcome);
    }
    const double p = trace_with(ordered_pseudo_projection(projs, recipe).op, rho.op());
    entries.push_back(SchemeEntry{std::move(tuple), std::move(outcomes), p});
  }
  return Scheme({observables.begin(), observables.end()}, std::move(entries), recipe, rho);
}

Scheme marginal(const Scheme& s, std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(errc::kInvalidSubset, "marginal needs at least one observable");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw Error(errc::kInvalidSubset, "repeated observable index");
  }
  if (kept.back() >= s.observables().size()) throw Error(errc::kInvalidSubset, "observable index out of range");

  std::vector<Observable> observables;
  std::vector<std::size_t> counts;
  for (std::size_t k : kept) {
    observables.push_back(s.observables()[k]);
    counts.push_back(s.observables()[k].outcome_count());
  }
  std::vector<SchemeEntry> entries;
  for (auto& tuple : canonical_tuples(counts)) {
    std::vector<double> outcomes;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      outcomes.push_back(observables[k].resolution()[tuple[k]].outcome);
    }
    entries.push_back(SchemeEntry{std::move(tuple), std::move(outcomes), 0.0});
  }

  std::vector<std::size_t> sub(kept.size());
  for (const auto& e : s.entries()) {
    for (std::size_t k = 0; k < kept.size(); ++k) sub[k] = e.index[kept[k]];
    std::size_t pos = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) pos = pos * counts[k] + sub[k];
    entries[pos].p += e.p;
  }
  return Scheme(std::move(observables), std::move(entries), s.recipe(), s.state());
}

double negativity(const Scheme& s) {
  double abs_sum = 0.0;
  for (const auto& e : s.entries()) abs_sum += std::abs(e.p);
  const double n = 0.5 * (abs_sum - 1.0);
  // Scheme construction pins the sum to 1 within 1e-10, which bounds n below.
  if (n < -kNormalizationTolerance) throw Error(errc::kNotNormalized, "negativity below zero");
  return std::max(n, 0.0);
}

Classification classify(const Scheme& s, double eps) {
  Classification c{true, {}};
  for (std::size_t pos = 0; pos < s.entries().size(); ++pos) {
    const auto& e = s.entries()[pos];
    if (e.p < -eps) c.negative_entries.push_back(NegativeEntry{pos, e.outcomes, e.p});
  }
  std::stable_sort(c.negative_entries.begin(), c.negative_entries.end(),
                   [](const NegativeEntry& a, const NegativeEntry& b) { return a.p < b.p; });
  c.classical = c.negative_entries.empty();
  return c;
}

CoarseGraining minimal_coarse_graining(const Scheme& s, double eps) {
  const auto v = s.values();
  return minimal_coarse_graining(v, eps);
}

}  // namespace pseudoprob
