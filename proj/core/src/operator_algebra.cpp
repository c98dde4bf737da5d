#include "pseudoprob/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

constexpr double kJacobiTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(errc::kDimMismatch, std::string(where) + ": " + std::to_string(a) + " vs " +
                                        std::to_string(b));
  }
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw Error(errc::kInvalidArgument, "matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw Error(errc::kInvalidArgument, "matrix dimension must be >= 1");
  if (data_.size() != dim * dim) {
    throw Error(errc::kDimMismatch, "expected " + std::to_string(dim * dim) + " entries, got " +
                                        std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw Error(errc::kNonFinite, "matrix has NaN or Inf entries");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw Error(errc::kInvalidArgument, "matrix dimension must be >= 1");
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(errc::kDimMismatch, "matrix literal is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw Error(errc::kNonFinite, "matrix has NaN or Inf entries");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

// --- HermitianOperator ------------------------------------------------------

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tolerance) : m_(m.dim()) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m(i, i).real();
    residual_ = std::max(residual_, std::abs(m(i, i).imag()));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex upper = m(i, j);
      const Complex lower_conj = std::conj(m(j, i));
      const Complex avg = 0.5 * (upper + lower_conj);
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
      residual_ = std::max(residual_, 0.5 * std::abs(upper - lower_conj));
    }
  }
  if (residual_ > tolerance) {
    throw Error(errc::kNotHermitian,
                "anti-Hermitian residual " + std::to_string(residual_) + " exceeds tolerance");
  }
}

HermitianOperator::HermitianOperator(Trusted, ComplexMatrix m) : m_(std::move(m)) {}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(Trusted{}, ComplexMatrix::identity(dim));
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(Trusted{}, ComplexMatrix(dim));
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(HermitianOperator::Trusted{}, a.m_ + b.m_);
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(HermitianOperator::Trusted{}, a.m_ - b.m_);
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(HermitianOperator::Trusted{}, a.m_ * Complex(s));
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

namespace pauli {
const HermitianOperator& x() {
  static const HermitianOperator op(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  return op;
}
const HermitianOperator& y() {
  static const HermitianOperator op(ComplexMatrix{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
  return op;
}
const HermitianOperator& z() {
  static const HermitianOperator op(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
  return op;
}
const HermitianOperator& identity() {
  static const HermitianOperator op = HermitianOperator::identity(2);
  return op;
}
}  // namespace pauli

HermitianOperator symmetrized_product(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "symmetrized_product");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  const ComplexMatrix ba = b.matrix() * a.matrix();
  return HermitianOperator(0.5 * (ab + ba));
}

EigenDecomposition eigen_decompose(const HermitianOperator& a) {
  const std::size_t n = a.dim();
  ComplexMatrix m = a.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiTolerance * std::max(1.0, m.frobenius_norm());

  int sweep = 0;
  while (off_diagonal_norm(m) > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw Error(errc::kEigNoConvergence,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = m(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Strip the phase so the 2x2 block is real symmetric, then apply the
        // classic real rotation. The combined unitary G acts on columns p, q:
        //   G = diag(1, conj(u)) * [[c, s], [-s, c]],  u = apq / |apq|.
        const Complex u = apq / mag;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex g00 = c;
        const Complex g01 = s;
        const Complex g10 = -std::conj(u) * s;
        const Complex g11 = std::conj(u) * c;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex mkp = m(k, p);
          const Complex mkq = m(k, q);
          m(k, p) = mkp * g00 + mkq * g10;
          m(k, q) = mkp * g01 + mkq * g11;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * g00 + vkq * g10;
          v(k, q) = vkp * g01 + vkq * g11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex mpk = m(p, k);
          const Complex mqk = m(q, k);
          m(p, k) = std::conj(g00) * mpk + std::conj(g10) * mqk;
          m(q, k) = std::conj(g01) * mpk + std::conj(g11) * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return m(i, i).real() < m(j, j).real();
  });

  EigenDecomposition out{Spectrum{}, ComplexMatrix(n)};
  out.spectrum.values.reserve(n);
  for (std::size_t col = 0; col < n; ++col) {
    out.spectrum.values.push_back(m(order[col], order[col]).real());
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

Spectrum eigenvalues_hermitian(const HermitianOperator& a) { return eigen_decompose(a).spectrum; }

double trace_with(const HermitianOperator& a, const HermitianOperator& rho) {
  require_same_dim(a.dim(), rho.dim(), "trace_with");
  const std::size_t n = a.dim();
  Complex t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) t += rho(i, k) * a(k, i);
  }
  if (std::abs(t.imag()) > kEpsLoose) {
    throw Error(errc::kNonHermitianTrace,
                "imaginary part " + std::to_string(t.imag()) + " in Tr(rho a)");
  }
  return t.real();
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

double commutator_norm(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "commutator_norm");
  return max_abs_diff(a.matrix() * b.matrix(), b.matrix() * a.matrix());
}

double idempotency_residual(const HermitianOperator& a) {
  return max_abs_diff(a.matrix() * a.matrix(), a.matrix());
}

}  // namespace pseudoprob
