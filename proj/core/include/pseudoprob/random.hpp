#pragma once

// Seeded sampling helpers shared by the scans, tests and benchmarks.
//
// Streams: every scan splits its samples into fixed-size blocks and draws
// block b from stream_engine(seed, b). The output therefore depends only on
// (seed, sample index), not on how blocks are scheduled across threads.

#include <cstdint>
#include <random>

#include "pseudoprob/operator_algebra.hpp"
#include "pseudoprob/states.hpp"

namespace pseudoprob {

using Rng = std::mt19937_64;

inline constexpr const char* kPrngName = "mt19937_64 seeded by seed_seq(seed_lo, seed_hi, stream)";

Rng stream_engine(std::uint64_t seed, std::uint64_t stream);

/// Uniform on the unit sphere.
Vec3 random_unit_vector(Rng& rng);
/// Uniform in the unit ball (radius ~ u^(1/3)).
Vec3 random_in_ball(Rng& rng);

/// Haar-random unitary: Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);

/// Projector onto a Haar-random subspace of the given rank.
HermitianOperator random_projector(Rng& rng, std::size_t dim, std::size_t rank);

/// Orthonormal columns from Gram-Schmidt on the first `count` columns of m.
ComplexMatrix gram_schmidt(const ComplexMatrix& m, std::size_t count);

}  // namespace pseudoprob
