#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pseudoprob/operator_algebra.hpp"

namespace pseudoprob {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Qubit polarisation vector, |p| <= 1.
class BlochVector {
 public:
  /// Throws unphysical-bloch when |p| > 1 + 1e-12.
  explicit BlochVector(const Vec3& p);

  const Vec3& p() const noexcept { return p_; }
  double norm() const { return pseudoprob::norm(p_); }

 private:
  Vec3 p_;
};

/// Unit 3-vector. Input is normalized; its norm must lie in [1e-6, 1e6].
class Direction {
 public:
  explicit Direction(const Vec3& m);

  static Direction x() { return Direction({1.0, 0.0, 0.0}); }
  static Direction y() { return Direction({0.0, 1.0, 0.0}); }
  static Direction z() { return Direction({0.0, 0.0, 1.0}); }

  const Vec3& m() const noexcept { return m_; }
  Direction flipped() const;

 private:
  struct Unit {};
  Direction(Unit, const Vec3& m) : m_(m) {}
  Vec3 m_;
};

/// Dichotomic qubit outcome label, +1 or -1.
class Outcome {
 public:
  static constexpr Outcome plus() { return Outcome(1); }
  static constexpr Outcome minus() { return Outcome(-1); }
  /// Throws invalid-outcome unless value is +1 or -1.
  static Outcome from_int(int value);

  constexpr int value() const noexcept { return value_; }
  constexpr Outcome operator-() const { return Outcome(-value_); }
  friend constexpr bool operator==(Outcome, Outcome) = default;

 private:
  constexpr explicit Outcome(int v) : value_(v) {}
  int value_;
};

/// Positive semidefinite, unit-trace Hermitian operator.
class DensityMatrix {
 public:
  /// Throws invalid-density when the trace is off by more than 1e-10 or an
  /// eigenvalue is below -1e-10.
  explicit DensityMatrix(HermitianOperator op);

  static DensityMatrix maximally_mixed(std::size_t dim);

  const HermitianOperator& op() const noexcept { return op_; }
  std::size_t dim() const noexcept { return op_.dim(); }

 private:
  HermitianOperator op_;
};

struct DensityDiagnostic {
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  double hermiticity_residual = 0.0;
  bool pass = false;
};

/// Never throws on physics grounds; reports what is wrong with a candidate
/// density matrix. Only a non-square or non-finite input can still throw.
DensityDiagnostic validate_density(const ComplexMatrix& rho);

/// One term a_i * pi_i of an eigen-resolution.
struct ResolutionTerm {
  double outcome;
  HermitianOperator projector;
};

/// Observable together with its eigen-resolution A = sum_i a_i pi_i.
class Observable {
 public:
  /// Validates idempotency, mutual orthogonality, completeness and
  /// op = sum a_i pi_i (all within 1e-10). Throws invalid-observable.
  Observable(HermitianOperator op, std::vector<ResolutionTerm> resolution);

  /// sigma . m with resolution ordered (+1, -1).
  static Observable qubit(const Direction& m);

  const HermitianOperator& op() const noexcept { return op_; }
  const std::vector<ResolutionTerm>& resolution() const noexcept { return resolution_; }
  std::size_t outcome_count() const noexcept { return resolution_.size(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  /// Set for observables built with qubit().
  const std::optional<Direction>& direction() const noexcept { return direction_; }

 private:
  HermitianOperator op_;
  std::vector<ResolutionTerm> resolution_;
  std::optional<Direction> direction_;
};

/// sigma . v for an arbitrary real 3-vector.
HermitianOperator sigma_dot(const Vec3& v);

/// (1 + sigma . P)/2.
DensityMatrix density_from_bloch(const BlochVector& p);

/// Inverse of density_from_bloch; requires a 2x2 state.
BlochVector bloch_from_density(const DensityMatrix& rho);

/// (1 + a sigma . m)/2. The two projectors for a direction sum to the
/// identity bit-for-bit, and flipping m is bit-identical to flipping a.
HermitianOperator projector_from_direction(const Direction& m, Outcome a);

}  // namespace pseudoprob
