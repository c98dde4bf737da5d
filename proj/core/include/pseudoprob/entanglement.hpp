#pragma once

#include <array>

#include "pseudoprob/states.hpp"

namespace pseudoprob {

/// |psi> = sum a_ij |ij>, basis order |00>, |01>, |10>, |11>.
class TwoQubitPureState {
 public:
  /// Accepts amplitudes whose squared norm is within `tolerance` of 1 and
  /// renormalizes them; throws not-normalized otherwise.
  explicit TwoQubitPureState(const std::array<Complex, 4>& amplitudes, double tolerance = 1e-12);

  /// cos(alpha)|00> + sin(alpha)|11>.
  static TwoQubitPureState schmidt(double alpha);

  const std::array<Complex, 4>& amplitudes() const noexcept { return amps_; }

 private:
  std::array<Complex, 4> amps_;
};

/// Partial trace over the other qubit; `subsystem` is 0 or 1.
DensityMatrix reduced_density(const TwoQubitPureState& psi, int subsystem);

/// (U (x) V)|psi>. Both factors must be 2x2 unitaries.
TwoQubitPureState apply_local(const TwoQubitPureState& psi, const ComplexMatrix& u, const ComplexMatrix& v);

struct MonotoneValue {
  double m;
};

struct MonotoneReport {
  /// |P| of the reduced state, |lambda_1 - lambda_2|.
  double reduced_bloch_norm;
  /// N_max of the reduced state.
  double n_max_reduced;
  MonotoneValue monotone;
};

/// 1 - N_max(rho_r) / N_max(pure) with N_max(pure) = 1/8.
MonotoneReport entanglement_report(const TwoQubitPureState& psi, int subsystem = 0);
MonotoneValue monotone(const TwoQubitPureState& psi, int subsystem = 0);

}  // namespace pseudoprob
