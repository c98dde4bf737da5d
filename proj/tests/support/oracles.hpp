#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// numerics: matrices go through Eigen, qubit formulas are expanded by hand and
// partitions are enumerated exhaustively.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pseudoprob/operator_algebra.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat to_eigen(const pseudoprob::ComplexMatrix& m) {
  Mat out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

inline Mat to_eigen(const pseudoprob::HermitianOperator& h) { return to_eigen(h.matrix()); }

inline double max_diff(const Mat& a, const pseudoprob::ComplexMatrix& b) {
  return (a - to_eigen(b)).cwiseAbs().maxCoeff();
}

inline std::vector<double> eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

/// Eigenvalues of [[a, b], [conj(b), d]] from the characteristic polynomial.
inline std::array<double, 2> eig2(double a, cd b, double d) {
  const double mean = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean - rad, mean + rad};
}

inline Mat pauli(int k) {
  Mat m = Mat::Zero(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat sigma_dot(const std::array<double, 3>& v) {
  return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3);
}

/// (1 + a sigma.m)/2
inline Mat qubit_projector(const std::array<double, 3>& m, int a) {
  return 0.5 * (pauli(0) + double(a) * sigma_dot(m));
}

/// (1 + sigma.P)/2
inline Mat qubit_state(const std::array<double, 3>& p) { return 0.5 * (pauli(0) + sigma_dot(p)); }

/// Average of (P + P^dagger)/2 over every ordering, by brute force.
inline Mat weyl(const std::vector<Mat>& projs) {
  std::vector<std::size_t> perm(projs.size());
  std::iota(perm.begin(), perm.end(), 0);
  Mat sum = Mat::Zero(projs[0].rows(), projs[0].cols());
  double count = 0;
  do {
    Mat prod = Mat::Identity(projs[0].rows(), projs[0].cols());
    for (auto k : perm) prod = prod * projs[k];
    sum += 0.5 * (prod + prod.adjoint());
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / count;
}

/// Re Tr(rho * op)
inline double expectation(const Mat& rho, const Mat& op) { return (rho * op).trace().real(); }

/// Pseudo-probability of a qubit sign pattern under Weyl ordering, via Eigen.
inline double qubit_weyl_entry(const std::array<double, 3>& p, const std::vector<std::array<double, 3>>& dirs,
                               const std::vector<int>& signs) {
  std::vector<Mat> projs;
  for (std::size_t k = 0; k < dirs.size(); ++k) projs.push_back(qubit_projector(dirs[k], signs[k]));
  return expectation(qubit_state(p), weyl(projs));
}

struct PartitionSearch {
  std::size_t best_blocks = 0;
  std::uint64_t maximizers = 0;
};

/// Every set partition of {0..n-1} via restricted growth strings; feasible if
/// each block sums to >= -eps.
inline PartitionSearch exhaustive_partitions(const std::vector<double>& v, double eps) {
  const std::size_t n = v.size();
  PartitionSearch out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<double> sums(blocks, 0.0);
      for (std::size_t k = 0; k < n; ++k) sums[rgs[k]] += v[k];
      for (double s : sums) {
        if (s < -eps) return;
      }
      if (blocks > out.best_blocks) {
        out.best_blocks = blocks;
        out.maximizers = 0;
      }
      if (blocks == out.best_blocks) ++out.maximizers;
      return;
    }
    for (std::size_t b = 0; b <= blocks && b < n; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 1);
  }
  return out;
}

/// Golden-section maximization of a unimodal f on [lo, hi].
template <class F>
std::pair<double, double> golden_max(F f, double lo, double hi, double tol = 1e-12) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

// --- seeded generators --------------------------------------------------------

using Gen = std::mt19937_64;

inline std::array<double, 3> unit_vector(Gen& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  while (true) {
    std::array<double, 3> v{n(g), n(g), n(g)};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (len > 1e-6) return {v[0] / len, v[1] / len, v[2] / len};
  }
}

inline std::array<double, 3> in_ball(Gen& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto d = unit_vector(g);
  const double r = std::cbrt(u(g));
  return {r * d[0], r * d[1], r * d[2]};
}

inline Mat haar_unitary(Gen& g, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = cd(n(g), n(g));
  }
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) q.col(k) *= std::polar(1.0, std::arg(r(k, k)));
  return q;
}

inline pseudoprob::ComplexMatrix from_eigen(const Mat& m) {
  std::vector<pseudoprob::Complex> e;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) e.push_back(m(i, j));
  }
  return pseudoprob::ComplexMatrix(static_cast<std::size_t>(m.rows()), std::move(e));
}

}  // namespace oracle
