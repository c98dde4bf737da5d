#include "pseudoprob/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

constexpr double kStateTolerance = 1e-10;
constexpr double kBlochSlack = 1e-12;

// Diagonal entry (1 + z)/2 of the projector along n, computed so that
// half_plus(z) + half_plus(-z) == 1 exactly: the larger half is rounded once,
// the smaller one is its exact complement.
double half_plus(double z) {
  if (z >= 0.0) return 0.5 * (1.0 + z);
  return 1.0 - 0.5 * (1.0 - z);
}

HermitianOperator projector_along(const Vec3& n) {
  const Complex off(0.5 * n[0], -0.5 * n[1]);
  return HermitianOperator(ComplexMatrix{{half_plus(n[2]), off}, {std::conj(off), half_plus(-n[2])}});
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BlochVector::BlochVector(const Vec3& p) : p_(p) {
  if (!std::all_of(p.begin(), p.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(errc::kNonFinite, "Bloch vector has non-finite components");
  }
  if (norm() > 1.0 + kBlochSlack) {
    throw Error(errc::kUnphysicalBloch, "|P| = " + std::to_string(norm()) + " > 1");
  }
}

Direction::Direction(const Vec3& m) {
  const double n = norm(m);
  if (!std::isfinite(n) || n < 1e-6 || n > 1e6) {
    throw Error(errc::kInvalidDirection, "direction norm " + std::to_string(n) +
                                             " outside [1e-6, 1e6]");
  }
  m_ = (1.0 / n) * m;
}

Direction Direction::flipped() const { return Direction(Unit{}, -1.0 * m_); }

Outcome Outcome::from_int(int value) {
  if (value != 1 && value != -1) {
    throw Error(errc::kInvalidOutcome, "outcome must be +1 or -1, got " + std::to_string(value));
  }
  return Outcome(value);
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const DensityDiagnostic d = validate_density(op_.matrix());
  if (!d.pass) {
    throw Error(errc::kInvalidDensity, "trace residual " + std::to_string(d.trace_residual) +
                                           ", min eigenvalue " + std::to_string(d.min_eigenvalue));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix((1.0 / static_cast<double>(dim)) * HermitianOperator::identity(dim));
}

DensityDiagnostic validate_density(const ComplexMatrix& rho) {
  DensityDiagnostic d;
  // Large tolerance so a badly non-Hermitian input is reported, not thrown.
  const HermitianOperator h(rho, std::numeric_limits<double>::infinity());
  d.hermiticity_residual = h.hermiticity_residual();
  d.trace_residual = std::abs(rho.trace() - Complex(1.0));
  d.min_eigenvalue = eigenvalues_hermitian(h).min();
  d.pass = d.trace_residual <= kStateTolerance && d.min_eigenvalue >= -kStateTolerance &&
           d.hermiticity_residual <= kEpsLoose;
  return d;
}

Observable::Observable(HermitianOperator op, std::vector<ResolutionTerm> resolution)
    : op_(std::move(op)), resolution_(std::move(resolution)) {
  if (resolution_.empty()) throw Error(errc::kInvalidObservable, "empty eigen-resolution");
  const std::size_t n = op_.dim();
  ComplexMatrix completeness(n);
  ComplexMatrix reconstructed(n);
  for (std::size_t i = 0; i < resolution_.size(); ++i) {
    const auto& pi = resolution_[i].projector;
    if (pi.dim() != n) throw Error(errc::kDimMismatch, "resolution projector dimension");
    if (idempotency_residual(pi) > kStateTolerance) {
      throw Error(errc::kInvalidObservable, "resolution term " + std::to_string(i) +
                                                " is not idempotent");
    }
    for (std::size_t j = i + 1; j < resolution_.size(); ++j) {
      if ((pi.matrix() * resolution_[j].projector.matrix()).max_norm() > kStateTolerance) {
        throw Error(errc::kInvalidObservable, "resolution projectors " + std::to_string(i) +
                                                  " and " + std::to_string(j) +
                                                  " are not orthogonal");
      }
    }
    completeness += pi.matrix();
    reconstructed += pi.matrix() * Complex(resolution_[i].outcome);
  }
  if (max_abs_diff(completeness, ComplexMatrix::identity(n)) > kStateTolerance) {
    throw Error(errc::kInvalidObservable, "resolution projectors do not sum to the identity");
  }
  if (max_abs_diff(reconstructed, op_.matrix()) > kStateTolerance) {
    throw Error(errc::kInvalidObservable, "operator differs from sum a_i pi_i");
  }
}

Observable Observable::qubit(const Direction& m) {
  Observable obs(sigma_dot(m.m()),
                 {ResolutionTerm{1.0, projector_from_direction(m, Outcome::plus())},
                  ResolutionTerm{-1.0, projector_from_direction(m, Outcome::minus())}});
  obs.direction_ = m;
  return obs;
}

HermitianOperator sigma_dot(const Vec3& v) {
  const Complex off(v[0], -v[1]);
  return HermitianOperator(ComplexMatrix{{v[2], off}, {std::conj(off), -v[2]}});
}

DensityMatrix density_from_bloch(const BlochVector& p) {
  const Vec3& v = p.p();
  const Complex off(0.5 * v[0], -0.5 * v[1]);
  return DensityMatrix(
      HermitianOperator(ComplexMatrix{{0.5 * (1.0 + v[2]), off}, {std::conj(off), 0.5 * (1.0 - v[2])}}));
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(errc::kDimMismatch, "Bloch vector needs a 2x2 state, got dim " +
                                        std::to_string(rho.dim()));
  }
  const auto& m = rho.op().matrix();
  const Complex r01 = m(0, 1);
  Vec3 p{2.0 * r01.real(), -2.0 * r01.imag(), (m(0, 0) - m(1, 1)).real()};
  // PSD states satisfy |P| <= 1 up to the density tolerance; clamp that slack.
  const double n = norm(p);
  if (n > 1.0) p = (1.0 / n) * p;
  return BlochVector(p);
}

HermitianOperator projector_from_direction(const Direction& m, Outcome a) {
  return projector_along(static_cast<double>(a.value()) * m.m());
}

}  // namespace pseudoprob
