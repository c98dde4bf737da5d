#include "pseudoprob/qubit_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

constexpr int kBisectionCap = 200;

constexpr std::array<Outcome, 2> kOutcomes{Outcome::plus(), Outcome::minus()};

double sign(Outcome a) { return static_cast<double>(a.value()); }

std::vector<SchemeEntry> closed_entries(std::size_t n, auto&& entry_fn) {
  std::vector<std::size_t> counts(n, 2);
  std::vector<SchemeEntry> entries;
  for (auto& tuple : canonical_tuples(counts)) {
    std::vector<double> outcomes;
    for (std::size_t idx : tuple) outcomes.push_back(sign(kOutcomes[idx]));
    const double p = entry_fn(tuple);
    entries.push_back(SchemeEntry{std::move(tuple), std::move(outcomes), p});
  }
  return entries;
}

// Bisection for the largest r in [0, 1] with classical(r) true, assuming
// classical is monotone (true below the threshold, false above).
template <typename Pred>
ThresholdSearch bisect_radius(Pred&& classical) {
  double lo = 0.0;
  double hi = 1.0;
  int it = 0;
  while (hi - lo > 1e-15 && it < kBisectionCap) {
    const double mid = 0.5 * (lo + hi);
    (classical(mid) ? lo : hi) = mid;
    ++it;
  }
  return ThresholdSearch{0.5 * (lo + hi), it};
}

void check_pnorm(double pnorm) {
  if (!(pnorm >= 0.0 && pnorm <= 1.0)) {
    throw Error(errc::kOutOfRange, "|P| = " + std::to_string(pnorm) + " outside [0, 1]");
  }
}

}  // namespace

PairGeometry::PairGeometry(BlochVector p, Direction m1, Direction m2)
    : p_(std::move(p)), m1_(std::move(m1)), m2_(std::move(m2)) {}

PairGeometry PairGeometry::aligned(double pnorm, double theta) {
  check_pnorm(pnorm);
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(errc::kOutOfRange, "theta = " + std::to_string(theta) + " outside [0, pi]");
  }
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  return PairGeometry(BlochVector({0.0, 0.0, pnorm}), Direction({s, 0.0, c}), Direction({-s, 0.0, c}));
}

double PairGeometry::theta() const {
  return std::acos(std::clamp(dot(m1_.m(), m2_.m()), -1.0, 1.0));
}

TripleGeometry::TripleGeometry(BlochVector p, Direction m1, Direction m2, Direction m3)
    : p_(std::move(p)), m_{std::move(m1), std::move(m2), std::move(m3)} {}

TripleGeometry TripleGeometry::coplanar120(const BlochVector& p) {
  const double s = std::sqrt(3.0) / 2.0;
  return TripleGeometry(p, Direction::z(), Direction({s, 0.0, -0.5}), Direction({-s, 0.0, -0.5}));
}

TripleGeometry TripleGeometry::orthogonal_aligned(const BlochVector& p) {
  const double r = p.norm();
  if (r == 0.0) return TripleGeometry(p, Direction::x(), Direction::y(), Direction::z());
  const Vec3 u = (1.0 / r) * p.p();
  // Helper axis least aligned with u, so the cross product is well conditioned.
  Vec3 helper{0.0, 0.0, 0.0};
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(u[i]) < std::abs(u[k])) k = i;
  }
  helper[k] = 1.0;
  const Vec3 e = Direction(cross(u, helper)).m();
  const Vec3 f = cross(u, e);
  std::array<Vec3, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / 3.0;
    const Vec3 w = std::cos(phi) * e + std::sin(phi) * f;
    m[i] = (1.0 / std::sqrt(3.0)) * u + std::sqrt(2.0 / 3.0) * w;
  }
  return TripleGeometry(p, Direction(m[0]), Direction(m[1]), Direction(m[2]));
}

double pair_entry_closed(const PairGeometry& g, Outcome a1, Outcome a2) {
  const Vec3& m1 = g.m1().m();
  const Vec3& m2 = g.m2().m();
  const double s1 = sign(a1);
  const double s2 = sign(a2);
  return 0.25 * (1.0 + s1 * s2 * dot(m1, m2) + dot(g.p().p(), s1 * m1 + s2 * m2));
}

Scheme pair_scheme_closed(const PairGeometry& g) {
  auto entries = closed_entries(2, [&](const std::vector<std::size_t>& t) {
    return pair_entry_closed(g, kOutcomes[t[0]], kOutcomes[t[1]]);
  });
  return Scheme({Observable::qubit(g.m1()), Observable::qubit(g.m2())}, std::move(entries),
                OrderingRecipe::weyl(), density_from_bloch(g.p()));
}

double triple_entry_closed(const TripleGeometry& g, Outcome a1, Outcome a2, Outcome a3) {
  const auto& m = g.m();
  const Vec3& p = g.p().p();
  const std::array<double, 3> a{sign(a1), sign(a2), sign(a3)};
  double linear = 0.0;
  for (std::size_t i = 0; i < 3; ++i) linear += a[i] * dot(p, m[i].m());
  double pairs = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) pairs += a[i] * a[j] * dot(m[i].m(), m[j].m());
  }
  double cyclic = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    cyclic += dot(p, m[i].m()) * dot(m[j].m(), m[k].m());
  }
  return 0.125 * (1.0 + linear + pairs + a[0] * a[1] * a[2] * cyclic / 3.0);
}

Scheme triple_scheme_weyl_closed(const TripleGeometry& g) {
  auto entries = closed_entries(3, [&](const std::vector<std::size_t>& t) {
    return triple_entry_closed(g, kOutcomes[t[0]], kOutcomes[t[1]], kOutcomes[t[2]]);
  });
  const auto& m = g.m();
  return Scheme({Observable::qubit(m[0]), Observable::qubit(m[1]), Observable::qubit(m[2])},
                std::move(entries), OrderingRecipe::weyl(), density_from_bloch(g.p()));
}

std::array<PseudoProjection, 3> triple_units(const TripleGeometry& g, const std::array<Outcome, 3>& a) {
  const std::vector<HermitianOperator> projs{projector_from_direction(g.m()[0], a[0]),
                                             projector_from_direction(g.m()[1], a[1]),
                                             projector_from_direction(g.m()[2], a[2])};
  // Orderings 123, 312, 231 (0-based below); each is paired with its reversal.
  constexpr std::array<std::array<std::size_t, 3>, 3> kOrders{{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}};
  auto make = [&](std::size_t k) {
    return PseudoProjection{hermitized_ordering(projs, kOrders[k]), projs, OrderingRecipe::unit(k)};
  };
  return {make(0), make(1), make(2)};
}

ThresholdSearch pair_classical_radius() {
  return bisect_radius([](double r) {
    const PairGeometry g = PairGeometry::aligned(r, 0.5 * std::numbers::pi);
    for (Outcome a1 : kOutcomes) {
      for (Outcome a2 : kOutcomes) {
        if (pair_entry_closed(g, a1, a2) < 0.0) return false;
      }
    }
    return true;
  });
}

ThresholdSearch triple_classical_radius() {
  return bisect_radius([](double r) {
    const double c = r / std::sqrt(3.0);
    const TripleGeometry g(BlochVector({c, c, c}), Direction::x(), Direction::y(), Direction::z());
    for (Outcome a1 : kOutcomes) {
      for (Outcome a2 : kOutcomes) {
        for (Outcome a3 : kOutcomes) {
          if (triple_entry_closed(g, a1, a2, a3) < 0.0) return false;
        }
      }
    }
    return true;
  });
}

double pair_classical_radius_exact() { return 1.0 / std::numbers::sqrt2; }
double triple_classical_radius_exact() { return 1.0 / std::numbers::sqrt3; }

double negativity_special(double pnorm, double theta) {
  check_pnorm(pnorm);
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(errc::kOutOfRange, "theta = " + std::to_string(theta) + " outside [0, pi]");
  }
  const double c = std::cos(0.5 * theta);
  // |P| - c written as (|P| - 1) + 2 sin^2(theta/4) keeps precision near theta = 0.
  const double s = std::sin(0.25 * theta);
  return std::max(0.0, 0.5 * c * ((pnorm - 1.0) + 2.0 * s * s));
}

NegativityMax negativity_max(double pnorm) {
  check_pnorm(pnorm);
  return NegativityMax{pnorm * pnorm / 8.0, 2.0 * std::acos(0.5 * pnorm)};
}

double nonclassical_onset(double pnorm) {
  check_pnorm(pnorm);
  double lo = 0.0;
  double hi = std::numbers::pi;
  if (pnorm == 0.0) return hi;
  for (int it = 0; it < kBisectionCap && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (negativity_special(pnorm, mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace pseudoprob
