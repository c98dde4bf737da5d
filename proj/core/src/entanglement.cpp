#include "pseudoprob/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudoprob/error.hpp"
#include "pseudoprob/qubit_forms.hpp"

namespace pseudoprob {

namespace {

// N_max of any pure single-qubit state (|P| = 1).
const double kPureNegativityMax = negativity_max(1.0).value;

}  // namespace

TwoQubitPureState::TwoQubitPureState(const std::array<Complex, 4>& amplitudes, double tolerance)
    : amps_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(errc::kNonFinite, "amplitude is not finite");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > tolerance) {
    throw Error(errc::kNotNormalized, "sum |amp|^2 = " + std::to_string(norm2));
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps_) a *= scale;
}

TwoQubitPureState TwoQubitPureState::schmidt(double alpha) {
  return TwoQubitPureState({std::cos(alpha), 0.0, 0.0, std::sin(alpha)});
}

DensityMatrix reduced_density(const TwoQubitPureState& psi, int subsystem) {
  if (subsystem != 0 && subsystem != 1) {
    throw Error(errc::kInvalidSubsystem, "subsystem must be 0 or 1, got " + std::to_string(subsystem));
  }
  const auto& a = psi.amplitudes();
  // amp(kept, traced) in the |kept traced> or |traced kept> layout.
  auto amp = [&](std::size_t kept, std::size_t traced) {
    return subsystem == 0 ? a[2 * kept + traced] : a[2 * traced + kept];
  };
  ComplexMatrix rho(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 2; ++k) s += amp(i, k) * std::conj(amp(j, k));
      rho(i, j) = s;
    }
  }
  return DensityMatrix(HermitianOperator(rho));
}

TwoQubitPureState apply_local(const TwoQubitPureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.dim() != 2 || v.dim() != 2) throw Error(errc::kDimMismatch, "local factors must be 2x2");
  const ComplexMatrix uv = kron(u, v);
  std::array<Complex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) out[i] += uv(i, k) * psi.amplitudes()[k];
  }
  return TwoQubitPureState(out, 1e-10);
}

MonotoneReport entanglement_report(const TwoQubitPureState& psi, int subsystem) {
  const Spectrum eig = eigenvalues_hermitian(reduced_density(psi, subsystem).op());
  const double pnorm = std::min(1.0, std::abs(eig.values[1] - eig.values[0]));
  const double n_max = negativity_max(pnorm).value;
  const double m = std::clamp(1.0 - n_max / kPureNegativityMax, 0.0, 1.0);
  return MonotoneReport{pnorm, n_max, MonotoneValue{m}};
}

MonotoneValue monotone(const TwoQubitPureState& psi, int subsystem) {
  return entanglement_report(psi, subsystem).monotone;
}

}  // namespace pseudoprob
