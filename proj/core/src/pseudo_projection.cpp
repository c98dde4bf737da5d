#include "pseudoprob/pseudo_projection.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

constexpr double kProjectorTolerance = 1e-10;
constexpr double kWeightTolerance = 1e-12;

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_generators(std::span<const HermitianOperator> projs, std::size_t min_count) {
  if (projs.size() < min_count) {
    throw Error(errc::kInvalidArgument, "need at least " + std::to_string(min_count) +
                                            " projectors, got " + std::to_string(projs.size()));
  }
  if (projs.size() > kMaxGenerators) {
    throw Error(errc::kOrderingExplosion, std::to_string(projs.size()) +
                                              " projectors exceed the limit of " +
                                              std::to_string(kMaxGenerators));
  }
  for (const auto& p : projs) {
    if (p.dim() != projs.front().dim()) throw Error(errc::kDimMismatch, "projector dimensions differ");
    require_projector(p);
  }
}

std::vector<HermitianOperator> copy_of(std::span<const HermitianOperator> projs) {
  return {projs.begin(), projs.end()};
}

ComplexMatrix ordered_product(std::span<const HermitianOperator> projs,
                              std::span<const std::size_t> order) {
  ComplexMatrix prod = projs[order[0]].matrix();
  for (std::size_t k = 1; k < order.size(); ++k) prod = prod * projs[order[k]].matrix();
  return prod;
}

double parse_double(const std::string& s) {
  // std::from_chars for double is not in every libstdc++ we target.
  std::istringstream in(s);
  double v = 0.0;
  in >> v;
  if (in.fail() || !in.eof()) throw Error(errc::kParse, "bad number '" + s + "'");
  return v;
}

}  // namespace

void OrderingRecipe::validate(std::size_t unit_count) const {
  if (const auto* u = as_unit()) {
    if (u->index >= unit_count) {
      throw Error(errc::kInvalidRecipe, "unit index " + std::to_string(u->index) +
                                            " out of range for " + std::to_string(unit_count) +
                                            " unit pseudo-projections");
    }
  } else if (const auto* w = as_weights()) {
    if (w->values.size() != unit_count) {
      throw Error(errc::kInvalidConvexWeights, "expected " + std::to_string(unit_count) +
                                                   " weights, got " +
                                                   std::to_string(w->values.size()));
    }
    double total = 0.0;
    for (double v : w->values) {
      if (!std::isfinite(v) || v < 0.0) throw Error(errc::kInvalidConvexWeights, "negative weight");
      total += v;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) {
      throw Error(errc::kInvalidConvexWeights, "weights sum to " + std::to_string(total));
    }
  }
}

std::string OrderingRecipe::to_string() const {
  if (is_weyl()) return "weyl";
  if (const auto* u = as_unit()) return "unit:" + std::to_string(u->index);
  std::ostringstream out;
  out.precision(17);
  out << "weights:";
  const auto& w = as_weights()->values;
  for (std::size_t k = 0; k < w.size(); ++k) out << (k ? "," : "") << w[k];
  return out.str();
}

OrderingRecipe OrderingRecipe::parse(const std::string& text) {
  if (text == "weyl") return weyl();
  if (text.rfind("unit:", 0) == 0) {
    const std::string rest = text.substr(5);
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(errc::kParse, "bad unit index in recipe '" + text + "'");
    }
    return unit(index);
  }
  if (text.rfind("weights:", 0) == 0) {
    std::vector<double> w;
    std::istringstream in(text.substr(8));
    std::string item;
    while (std::getline(in, item, ',')) w.push_back(parse_double(item));
    if (w.empty()) throw Error(errc::kParse, "empty weight list in recipe");
    return weights(std::move(w));
  }
  throw Error(errc::kParse, "unknown recipe '" + text + "' (expected weyl, unit:k, weights:...)");
}

void require_projector(const HermitianOperator& a) {
  const double r = idempotency_residual(a);
  if (r > kProjectorTolerance) {
    throw Error(errc::kNotAProjector, "idempotency residual " + std::to_string(r));
  }
}

std::vector<std::vector<std::size_t>> ordering_classes(std::size_t n) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // A class is represented by whichever of {s, reverse(s)} is smaller.
    if (!std::lexicographical_compare(perm.rbegin(), perm.rend(), perm.begin(), perm.end())) {
      classes.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return classes;
}

HermitianOperator hermitized_ordering(std::span<const HermitianOperator> projs,
                                      std::span<const std::size_t> order) {
  const ComplexMatrix prod = ordered_product(projs, order);
  return HermitianOperator(0.5 * (prod + prod.adjoint()));
}

std::vector<UnitPseudoProjection> unit_pseudo_projections(std::span<const HermitianOperator> projs) {
  check_generators(projs, 2);
  const std::size_t n = projs.size();
  std::vector<UnitPseudoProjection> units;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    HermitianOperator op = hermitized_ordering(projs, perm);
    auto same = std::find_if(units.begin(), units.end(), [&](const UnitPseudoProjection& u) {
      return max_abs_diff(u.pp.op.matrix(), op.matrix()) <= kDedupTolerance;
    });
    if (same != units.end()) {
      ++same->multiplicity;
      continue;
    }
    const std::size_t index = units.size();
    units.push_back(UnitPseudoProjection{
        PseudoProjection{std::move(op), copy_of(projs), OrderingRecipe::unit(index)}, perm, 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return units;
}

PseudoProjection weyl_pseudo_projection(std::span<const HermitianOperator> projs) {
  check_generators(projs, 2);
  const std::size_t n = projs.size();
  ComplexMatrix sum(projs.front().dim());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    sum += ordered_product(projs, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // The orderings come in adjoint pairs, so the sum is Hermitian already.
  sum *= Complex(1.0 / static_cast<double>(factorial(n)));
  return PseudoProjection{HermitianOperator(sum), copy_of(projs), OrderingRecipe::weyl()};
}

PseudoProjection combine(std::span<const PseudoProjection> units, std::span<const double> weights) {
  if (units.empty()) throw Error(errc::kInvalidConvexWeights, "no units to combine");
  if (units.size() != weights.size()) {
    throw Error(errc::kInvalidConvexWeights, std::to_string(weights.size()) + " weights for " +
                                                 std::to_string(units.size()) + " units");
  }
  OrderingRecipe recipe = OrderingRecipe::weights({weights.begin(), weights.end()});
  recipe.validate(units.size());
  HermitianOperator op = HermitianOperator::zero(units.front().op.dim());
  for (std::size_t k = 0; k < units.size(); ++k) {
    if (units[k].op.dim() != op.dim()) throw Error(errc::kDimMismatch, "combine: unit dimensions differ");
    op = op + weights[k] * units[k].op;
  }
  return PseudoProjection{std::move(op), units.front().generators, std::move(recipe)};
}

PseudoProjection ordered_pseudo_projection(std::span<const HermitianOperator> projs,
                                           const OrderingRecipe& recipe) {
  check_generators(projs, 1);
  const auto classes = ordering_classes(projs.size());
  recipe.validate(classes.size());
  if (projs.size() == 1) return PseudoProjection{projs.front(), copy_of(projs), recipe};
  if (recipe.is_weyl()) return weyl_pseudo_projection(projs);
  if (const auto* u = recipe.as_unit()) {
    return PseudoProjection{hermitized_ordering(projs, classes[u->index]), copy_of(projs), recipe};
  }
  const auto& w = recipe.as_weights()->values;
  HermitianOperator op = HermitianOperator::zero(projs.front().dim());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (w[k] != 0.0) op = op + w[k] * hermitized_ordering(projs, classes[k]);
  }
  return PseudoProjection{std::move(op), copy_of(projs), recipe};
}

HermitianOperator disjunction_operator(const HermitianOperator& pa, const HermitianOperator& pb) {
  if (pa.dim() != pb.dim()) throw Error(errc::kDimMismatch, "disjunction_operator");
  require_projector(pa);
  require_projector(pb);
  return pa + pb - symmetrized_product(pa, pb);
}

HermitianOperator negation_operator(const PseudoProjection& pp) {
  return HermitianOperator::identity(pp.op.dim()) - pp.op;
}

double negation_residual(const PseudoProjection& pp) {
  return (negation_operator(pp).matrix() * pp.op.matrix()).max_norm();
}

SpectralAudit spectral_audit(const PseudoProjection& pp) {
  SpectralAudit audit{eigenvalues_hermitian(pp.op).min(), 0.0,
                      idempotency_residual(pp.op) <= kProjectorTolerance};
  for (std::size_t i = 0; i < pp.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < pp.generators.size(); ++j) {
      audit.commutator_norm =
          std::max(audit.commutator_norm, commutator_norm(pp.generators[i], pp.generators[j]));
    }
  }
  return audit;
}

}  // namespace pseudoprob
