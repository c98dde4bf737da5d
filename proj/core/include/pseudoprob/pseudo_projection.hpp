#pragma once

// Pseudo-projections: Hermitian representatives of the indicator function of
// a joint outcome of several (generally non-commuting) projectors.
//
// For N projectors each ordering pi_{s(1)} ... pi_{s(N)} gives a "unit"
// pseudo-projection (P + P^dagger)/2. An ordering and its reversal hermitize
// to the same operator, so there are at most N!/2 of them; the family of
// admissible pseudo-projections is their convex hull, and Weyl ordering is the
// equal-weight average over all N! orderings.

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pseudoprob/operator_algebra.hpp"

namespace pseudoprob {

/// Largest projector list accepted by the ordering enumeration (8! = 40320).
inline constexpr std::size_t kMaxGenerators = 8;
/// Entrywise tolerance under which two unit pseudo-projections are the same.
inline constexpr double kDedupTolerance = 1e-10;

/// How to pick one pseudo-projection out of the convex family.
class OrderingRecipe {
 public:
  struct Weyl {
    friend bool operator==(const Weyl&, const Weyl&) = default;
  };
  struct Unit {
    std::size_t index;
    friend bool operator==(const Unit&, const Unit&) = default;
  };
  struct Weights {
    std::vector<double> values;
    friend bool operator==(const Weights&, const Weights&) = default;
  };

  static OrderingRecipe weyl() { return OrderingRecipe(Weyl{}); }
  static OrderingRecipe unit(std::size_t index) { return OrderingRecipe(Unit{index}); }
  static OrderingRecipe weights(std::vector<double> w) { return OrderingRecipe(Weights{std::move(w)}); }

  bool is_weyl() const { return std::holds_alternative<Weyl>(kind_); }
  const Unit* as_unit() const { return std::get_if<Unit>(&kind_); }
  const Weights* as_weights() const { return std::get_if<Weights>(&kind_); }

  /// Throws invalid-recipe / invalid-convex-weights if the recipe does not
  /// fit a family of `unit_count` unit pseudo-projections.
  void validate(std::size_t unit_count) const;

  /// "weyl", "unit:k" or "weights:w0,w1,...".
  std::string to_string() const;
  /// Inverse of to_string(); throws parse-error.
  static OrderingRecipe parse(const std::string& text);

  friend bool operator==(const OrderingRecipe&, const OrderingRecipe&) = default;

 private:
  explicit OrderingRecipe(std::variant<Weyl, Unit, Weights> k) : kind_(std::move(k)) {}
  std::variant<Weyl, Unit, Weights> kind_;
};

struct PseudoProjection {
  HermitianOperator op;
  std::vector<HermitianOperator> generators;
  OrderingRecipe recipe;
};

/// One unit pseudo-projection together with its provenance.
struct UnitPseudoProjection {
  PseudoProjection pp;
  /// First permutation (lexicographic) that produced this operator.
  std::vector<std::size_t> ordering;
  /// How many of the N! orderings hermitize to this operator.
  std::size_t multiplicity;
};

/// Ordering classes {s, reverse(s)} in canonical order: the lexicographically
/// first permutation of each class, sorted. There are max(1, N!/2) of them.
std::vector<std::vector<std::size_t>> ordering_classes(std::size_t n);

/// (P + P^dagger)/2 with P = projs[order[0]] * projs[order[1]] * ...
HermitianOperator hermitized_ordering(std::span<const HermitianOperator> projs,
                                      std::span<const std::size_t> order);

/// Distinct unit pseudo-projections (deduplicated within 1e-10), in the order
/// in which their first generating permutation appears lexicographically.
/// Requires 2 <= N <= 8 projectors of equal dimension.
std::vector<UnitPseudoProjection> unit_pseudo_projections(std::span<const HermitianOperator> projs);

/// Average over all N! hermitized orderings.
PseudoProjection weyl_pseudo_projection(std::span<const HermitianOperator> projs);

/// Convex combination of existing pseudo-projections (weights >= 0, sum 1).
PseudoProjection combine(std::span<const PseudoProjection> units, std::span<const double> weights);

/// Pseudo-projection of `projs` under `recipe`, where unit indices and weight
/// slots refer to ordering_classes(N). Works for N = 1 (returns the projector).
PseudoProjection ordered_pseudo_projection(std::span<const HermitianOperator> projs,
                                           const OrderingRecipe& recipe);

/// pi_A + pi_B - {pi_A, pi_B}/2, the representative of "A or B".
HermitianOperator disjunction_operator(const HermitianOperator& pa, const HermitianOperator& pb);

/// 1 - Pi.
HermitianOperator negation_operator(const PseudoProjection& pp);

/// max-norm of N * Pi with N = 1 - Pi. Zero for true projections; generally
/// nonzero otherwise. Reported only, never enforced.
double negation_residual(const PseudoProjection& pp);

struct SpectralAudit {
  double min_eig;
  /// max over generator pairs of ||[pi_i, pi_j]||_max.
  double commutator_norm;
  bool is_true_projection;
};

SpectralAudit spectral_audit(const PseudoProjection& pp);

/// Throws not-a-projector unless a*a == a within 1e-10.
void require_projector(const HermitianOperator& a);

}  // namespace pseudoprob
