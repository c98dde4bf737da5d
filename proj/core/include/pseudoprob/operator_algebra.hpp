#pragma once

// Small dense complex matrices and Hermitian operators.
//
// Everything here is sized for the few-level systems this library works with
// (dimension 2..16 in practice, 64 at most). Storage is a flat row-major
// std::vector; no expression templates, no aliasing tricks.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pseudoprob {

using Complex = std::complex<double>;

/// Tight tolerance for exact-in-principle identities.
inline constexpr double kEpsNum = 1e-12;
/// Loose tolerance for accumulated round-off (construction checks).
inline constexpr double kEpsLoose = 1e-9;

class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; entries.size() must be dim * dim and all finite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_norm() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// max_{ij} |a_ij - b_ij|; throws dim-mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product, a is the slow (left) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian operator. Construction stores the Hermitian part (M + M^dagger)/2
/// and remembers how much anti-Hermitian residue was dropped; a residue above
/// the tolerance is treated as a caller bug.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m, double tolerance = kEpsLoose);

  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator zero(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }
  /// max-norm of the anti-Hermitian part discarded at construction.
  double hermiticity_residual() const noexcept { return residual_; }

  double trace() const { return m_.trace().real(); }

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);

  friend bool operator==(const HermitianOperator& a, const HermitianOperator& b) {
    return a.m_ == b.m_;
  }

 private:
  struct Trusted {};
  HermitianOperator(Trusted, ComplexMatrix m);

  ComplexMatrix m_;
  double residual_ = 0.0;
};

/// Eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double sum() const;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Column k is the eigenvector for spectrum.values[k].
  ComplexMatrix vectors;
};

namespace pauli {
const HermitianOperator& x();
const HermitianOperator& y();
const HermitianOperator& z();
const HermitianOperator& identity();
}  // namespace pauli

/// (ab + ba)/2.
HermitianOperator symmetrized_product(const HermitianOperator& a, const HermitianOperator& b);

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm drops
/// to 1e-13 (relative to max(1, ||A||_F)); gives up after 100 sweeps.
Spectrum eigenvalues_hermitian(const HermitianOperator& a);
EigenDecomposition eigen_decompose(const HermitianOperator& a);

/// Re Tr(rho a). Throws non-hermitian-trace when |Im Tr| exceeds 1e-9.
double trace_with(const HermitianOperator& a, const HermitianOperator& rho);

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// max-norm of [a, b].
double commutator_norm(const HermitianOperator& a, const HermitianOperator& b);

/// max-norm of a*a - a.
double idempotency_residual(const HermitianOperator& a);

}  // namespace pseudoprob
