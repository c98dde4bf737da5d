#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pseudoprob/entanglement.hpp"
#include "pseudoprob/error.hpp"
#include "pseudoprob/qubit_forms.hpp"
#include "pseudoprob/random.hpp"

using namespace pseudoprob;

namespace {

constexpr double kPi = std::numbers::pi;

TwoQubitPureState basis(int k) {
  std::array<Complex, 4> a{};
  a[k] = 1.0;
  return TwoQubitPureState(a);
}

// Partial trace through Eigen on the full 4x4 projector.
oracle::Mat reduced_oracle(const TwoQubitPureState& psi, int subsystem) {
  Eigen::VectorXcd v(4);
  for (int k = 0; k < 4; ++k) v(k) = psi.amplitudes()[k];
  const oracle::Mat full = v * v.adjoint();
  oracle::Mat r = oracle::Mat::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int t = 0; t < 2; ++t) {
        r(i, j) += subsystem == 0 ? full(2 * i + t, 2 * j + t) : full(2 * t + i, 2 * t + j);
      }
    }
  }
  return r;
}

// M from the reduced state's Bloch vector, going through Pauli expectations.
double monotone_oracle(const TwoQubitPureState& psi) {
  const auto r = reduced_oracle(psi, 0);
  double p2 = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const double c = (r * oracle::pauli(k)).trace().real();
    p2 += c * c;
  }
  return 1.0 - p2;
}

}  // namespace

TEST(TwoQubitState, NormalizationCheck) {
  EXPECT_NO_THROW(TwoQubitPureState({1.0, 0.0, 0.0, 1e-7}));
  EXPECT_THROW(TwoQubitPureState({1.0, 0.0, 0.0, 0.1}), Error);
  EXPECT_NO_THROW(TwoQubitPureState({1.0, 0.0, 0.0, 0.0001}, 1e-6));
  try {
    TwoQubitPureState({2.0, 0.0, 0.0, 0.0});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::kNotNormalized);
  }
}

TEST(ReducedDensity, Examples) {
  EXPECT_EQ(reduced_density(basis(0), 0).op().matrix(), (ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}));
  const auto bell = TwoQubitPureState::schmidt(kPi / 4);
  EXPECT_LT(max_abs_diff(reduced_density(bell, 0).op().matrix(), 0.5 * ComplexMatrix::identity(2)), 1e-15);
  const auto s = TwoQubitPureState::schmidt(kPi / 8);
  const double c = std::cos(kPi / 8), sn = std::sin(kPi / 8);
  EXPECT_LT(max_abs_diff(reduced_density(s, 0).op().matrix(), ComplexMatrix{{c * c, 0.0}, {0.0, sn * sn}}), 1e-15);
  EXPECT_THROW(reduced_density(s, 2), Error);
}

TEST(ReducedDensity, MatchesPartialTraceOracle) {
  Rng rng = stream_engine(71, 0);
  for (int k = 0; k < 500; ++k) {
    const ComplexMatrix u = random_unitary(rng, 4);
    std::array<Complex, 4> a{};
    for (int i = 0; i < 4; ++i) a[i] = u(i, 0);
    const TwoQubitPureState psi(a, 1e-10);
    for (int sub : {0, 1}) EXPECT_LT(oracle::max_diff(reduced_oracle(psi, sub), reduced_density(psi, sub).op().matrix()), 1e-14);
  }
}

TEST(Monotone, Examples) {
  EXPECT_NEAR(monotone(basis(1)).m, 0.0, 1e-12);
  EXPECT_NEAR(monotone(TwoQubitPureState::schmidt(kPi / 4)).m, 1.0, 1e-12);
  EXPECT_NEAR(monotone(TwoQubitPureState::schmidt(kPi / 8)).m, 0.5, 1e-12);
  const auto r = entanglement_report(TwoQubitPureState::schmidt(kPi / 8));
  EXPECT_NEAR(r.reduced_bloch_norm, std::cos(kPi / 4), 1e-12);
  EXPECT_NEAR(r.n_max_reduced, 0.5 / 8, 1e-12);
}

TEST(Monotone, SchmidtFamily) {
  for (int i = 0; i <= 100; ++i) {
    const double alpha = (kPi / 2) * i / 100.0;
    const auto psi = TwoQubitPureState::schmidt(alpha);
    const double m = monotone(psi).m;
    EXPECT_NEAR(m, std::pow(std::sin(2 * alpha), 2), 1e-10);
    EXPECT_NEAR(m, monotone_oracle(psi), 1e-10);
    EXPECT_NEAR(m, monotone(psi, 1).m, 1e-12);
  }
}

TEST(Monotone, RandomStatesRangeAndSymmetry) {
  Rng rng = stream_engine(72, 0);
  for (int k = 0; k < 1000; ++k) {
    const ComplexMatrix u = random_unitary(rng, 4);
    std::array<Complex, 4> a{};
    for (int i = 0; i < 4; ++i) a[i] = u(i, 0);
    const TwoQubitPureState psi(a, 1e-10);
    const auto r0 = entanglement_report(psi, 0);
    const auto r1 = entanglement_report(psi, 1);
    EXPECT_GE(r0.monotone.m, 0.0);
    EXPECT_LE(r0.monotone.m, 1.0 + 1e-12);
    EXPECT_NEAR(r0.monotone.m, r1.monotone.m, 1e-12);
    EXPECT_NEAR(r0.monotone.m, monotone_oracle(psi), 1e-10);
  }
}

TEST(Monotone, ZeroExactlyForProductStates) {
  Rng rng = stream_engine(73, 0);
  for (int k = 0; k < 300; ++k) {
    const ComplexMatrix u = random_unitary(rng, 2);
    const ComplexMatrix v = random_unitary(rng, 2);
    const auto psi = apply_local(basis(0), u, v);
    EXPECT_NEAR(monotone(psi).m, 0.0, 1e-10);
    EXPECT_NEAR(entanglement_report(psi).reduced_bloch_norm, 1.0, 1e-10);
  }
}

TEST(Monotone, LocalUnitaryInvariance) {
  Rng rng = stream_engine(74, 0);
  for (int k = 0; k < 1000; ++k) {
    const auto psi = TwoQubitPureState::schmidt(0.01 * k);
    const auto moved = apply_local(psi, random_unitary(rng, 2), random_unitary(rng, 2));
    EXPECT_NEAR(monotone(moved).m, monotone(psi).m, 1e-10);
  }
}
