#pragma once

// Closed-form qubit results for pairs and triples of spin observables
// sigma . m_i, and the thresholds and negativity curves that follow from them.
// Each closed form has a matrix-pipeline counterpart (build_scheme) that the
// tests hold it against.

#include <array>

#include "pseudoprob/scheme.hpp"
#include "pseudoprob/states.hpp"

namespace pseudoprob {

class PairGeometry {
 public:
  PairGeometry(BlochVector p, Direction m1, Direction m2);

  /// P parallel to m1 + m2 with |P| = pnorm, m1 and m2 at angle theta in the
  /// x-z plane, symmetric about z. For theta == pi the sum vanishes and P is
  /// placed along z.
  static PairGeometry aligned(double pnorm, double theta);

  const BlochVector& p() const noexcept { return p_; }
  const Direction& m1() const noexcept { return m1_; }
  const Direction& m2() const noexcept { return m2_; }
  /// Angle between m1 and m2, in [0, pi].
  double theta() const;

 private:
  BlochVector p_;
  Direction m1_;
  Direction m2_;
};

class TripleGeometry {
 public:
  TripleGeometry(BlochVector p, Direction m1, Direction m2, Direction m3);

  /// m1 = z, m2 and m3 rotated by +-120 degrees in the x-z plane.
  static TripleGeometry coplanar120(const BlochVector& p);
  /// Orthonormal triple with m1 + m2 + m3 parallel to P (or x, y, z if P = 0).
  static TripleGeometry orthogonal_aligned(const BlochVector& p);

  const BlochVector& p() const noexcept { return p_; }
  const std::array<Direction, 3>& m() const noexcept { return m_; }

 private:
  BlochVector p_;
  std::array<Direction, 3> m_;
};

/// (1 + a1 a2 m1.m2 + P.(a1 m1 + a2 m2))/4.
double pair_entry_closed(const PairGeometry& g, Outcome a1, Outcome a2);

/// Weyl pair scheme from the closed form, canonical order (++, +-, -+, --).
Scheme pair_scheme_closed(const PairGeometry& g);

/// Weyl triple entry
///   (1 + P.sum a_i m_i + sum_{i<j} a_i a_j m_i.m_j
///      + a1 a2 a3 / 3 * sum_cyclic (P.m_i)(m_j.m_k)) / 8.
double triple_entry_closed(const TripleGeometry& g, Outcome a1, Outcome a2, Outcome a3);

Scheme triple_scheme_weyl_closed(const TripleGeometry& g);

/// The three inequivalent unit pseudo-projections for a triple, in the order
///   (p1 p2 p3 + p3 p2 p1)/2, (p3 p1 p2 + p2 p1 p3)/2, (p2 p3 p1 + p1 p3 p2)/2.
std::array<PseudoProjection, 3> triple_units(const TripleGeometry& g,
                                             const std::array<Outcome, 3>& a);

struct ThresholdSearch {
  double radius;
  int iterations;
};

/// Largest |P| keeping the worst-case orthogonal pair scheme non-negative,
/// found by bisection on the aligned geometry (P parallel to m1 + m2).
ThresholdSearch pair_classical_radius();
/// Same for orthogonal triples (P parallel to m1 + m2 + m3).
ThresholdSearch triple_classical_radius();

/// Analytic thresholds the bisections converge to.
double pair_classical_radius_exact();
double triple_classical_radius_exact();

/// max(0, (|P| cos(theta/2) - cos^2(theta/2)) / 2) for the aligned pair
/// geometry. pnorm in [0, 1], theta in [0, pi]; throws out-of-range.
double negativity_special(double pnorm, double theta);

struct NegativityMax {
  double value;
  /// Maximizing angle 2 arccos(|P|/2).
  double theta_star;
};

/// |P|^2 / 8, attained at theta_star.
NegativityMax negativity_max(double pnorm);

/// Smallest theta at which negativity_special turns positive, by bisection.
/// Equals 2 arccos(|P|); returns pi when |P| == 0 (never positive).
double nonclassical_onset(double pnorm);

}  // namespace pseudoprob
