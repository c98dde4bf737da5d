#pragma once

// Seeded, reproducible parameter sweeps behind the CLI: negativity curves for
// the aligned pair geometry, classical-region estimates for observable
// families, and spectral audits of random projector pairs.

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pseudoprob {

inline constexpr const char* kVersion = "1.0.0";

struct ScanResult {
  std::string kind;
  nlohmann::ordered_json params;
  std::vector<std::string> columns;
  /// Ordered by the scanned parameter (or sample index).
  std::vector<std::vector<double>> rows;
  nlohmann::ordered_json summary;
  std::vector<std::string> warnings;
  nlohmann::ordered_json metadata;
};

struct NegativityScanParams {
  double pnorm = 1.0;
  double theta_min = 0.0;
  double theta_max = std::numbers::pi;
  std::size_t steps = 181;
};

/// Rows (theta, negativity) on an evenly spaced grid including both ends.
/// Endpoints outside [0, pi] are clipped and reported in `warnings`.
ScanResult scan_negativity(const NegativityScanParams& params);

enum class RegionFamily { kOrthogonalPair, kOrthogonalTriple, kFreePair };

RegionFamily parse_region_family(const std::string& name);
std::string to_string(RegionFamily family);

struct ClassicalRegionParams {
  RegionFamily family = RegionFamily::kOrthogonalPair;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double eps = 1e-10;
  /// Angles tried per state for the free-pair family.
  std::size_t geometry_steps = 64;
  /// Random frames per state used to cross-check the worst-case geometry.
  std::size_t random_frames = 4;
  std::size_t radial_bins = 10;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Monte Carlo over states uniform in the Bloch ball. The critical radius is
/// a deterministic bisection; only the volume fractions are sampled.
ScanResult classical_region(const ClassicalRegionParams& params);

struct SpectrumScanParams {
  std::size_t dim = 2;
  std::size_t rank_a = 1;
  std::size_t rank_b = 1;
  std::uint64_t pairs = 1000;
  std::uint64_t seed = 0;
  /// Build both projectors diagonal in one random basis.
  bool commuting = false;
  unsigned threads = 0;
};

/// Per pair: min eigenvalue of {A, B}/2 and ||[A, B]||_max. A violation is a
/// non-commuting pair (commutator > 1e-6) without a negative eigenvalue, or a
/// commuting pair with an eigenvalue below -1e-12.
ScanResult spectrum_scan(const SpectrumScanParams& params);

/// Samples per independent PRNG stream.
inline constexpr std::uint64_t kScanBlockSize = 4096;

}  // namespace pseudoprob
