#include "pseudoprob/random.hpp"

#include <cmath>
#include <string>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

ComplexMatrix gaussian_matrix(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

Rng stream_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    const double x = normal(rng);
    const double y = normal(rng);
    const double z = normal(rng);
    const Vec3 v{x, y, z};
    const double n = norm(v);
    if (n > 1e-8) return (1.0 / n) * v;
  }
}

Vec3 random_in_ball(Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const Vec3 dir = random_unit_vector(rng);
  const double r = std::cbrt(uniform(rng));
  return r * dir;
}

ComplexMatrix gram_schmidt(const ComplexMatrix& m, std::size_t count) {
  const std::size_t n = m.dim();
  ComplexMatrix q(n);
  for (std::size_t col = 0; col < count; ++col) {
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m(i, col);
    // Two passes of modified Gram-Schmidt keep orthogonality at round-off level.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, prev)) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, prev);
      }
    }
    double len = 0.0;
    for (const auto& z : v) len += std::norm(z);
    len = std::sqrt(len);
    if (len < 1e-12) throw Error(errc::kInvalidArgument, "Gram-Schmidt hit a dependent column");
    for (std::size_t i = 0; i < n; ++i) q(i, col) = v[i] / len;
  }
  return q;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
  return gram_schmidt(gaussian_matrix(rng, dim), dim);
}

HermitianOperator random_projector(Rng& rng, std::size_t dim, std::size_t rank) {
  if (rank > dim) {
    throw Error(errc::kInvalidArgument, "rank " + std::to_string(rank) + " exceeds dim " + std::to_string(dim));
  }
  const ComplexMatrix q = gram_schmidt(gaussian_matrix(rng, dim), rank);
  ComplexMatrix p(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < rank; ++k) s += q(i, k) * std::conj(q(j, k));
      p(i, j) = s;
    }
  }
  return HermitianOperator(p);
}

}  // namespace pseudoprob
