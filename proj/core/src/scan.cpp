#include "pseudoprob/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "pseudoprob/error.hpp"
#include "pseudoprob/pseudo_projection.hpp"
#include "pseudoprob/qubit_forms.hpp"
#include "pseudoprob/random.hpp"

namespace pseudoprob {

namespace {

constexpr double kCommutingThreshold = 1e-6;
constexpr double kCommutingSlack = 1e-12;

constexpr std::array<Outcome, 2> kOutcomes{Outcome::plus(), Outcome::minus()};

unsigned resolve_threads(unsigned requested, std::uint64_t blocks) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(blocks, 1)));
}

// Runs fn(block, begin, end) for every block of kScanBlockSize samples and
// returns the results in block order, whatever the thread interleaving.
template <typename Fn>
auto run_blocks(std::uint64_t total, unsigned threads, Fn fn) {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t blocks = (total + kScanBlockSize - 1) / kScanBlockSize;
  std::vector<Result> results(blocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      try {
        const std::uint64_t begin = b * kScanBlockSize;
        results[b] = fn(b, begin, std::min(total, begin + kScanBlockSize));
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = resolve_threads(threads, blocks);
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

double pair_min_entry(const PairGeometry& g) {
  double m = 1.0;
  for (Outcome a1 : kOutcomes) {
    for (Outcome a2 : kOutcomes) m = std::min(m, pair_entry_closed(g, a1, a2));
  }
  return m;
}

double triple_min_entry(const TripleGeometry& g) {
  double m = 1.0;
  for (Outcome a1 : kOutcomes) {
    for (Outcome a2 : kOutcomes) {
      for (Outcome a3 : kOutcomes) m = std::min(m, triple_entry_closed(g, a1, a2, a3));
    }
  }
  return m;
}

// Random orthonormal frame (rows of a random real rotation).
std::array<Vec3, 3> random_frame(Rng& rng) {
  const Vec3 a = random_unit_vector(rng);
  Vec3 b = random_unit_vector(rng);
  b = b - dot(a, b) * a;
  while (norm(b) < 1e-6) {
    b = random_unit_vector(rng);
    b = b - dot(a, b) * a;
  }
  b = (1.0 / norm(b)) * b;
  return {a, b, cross(a, b)};
}

struct RegionBlock {
  std::vector<std::uint64_t> bin_total;
  std::vector<std::uint64_t> bin_classical;
  std::uint64_t classical = 0;
  std::uint64_t nonzero = 0;
  std::uint64_t nonclassical_nonzero = 0;
  std::uint64_t frame_violations = 0;
};

bool state_classical(const ClassicalRegionParams& p, const BlochVector& state, Rng& rng,
                     std::uint64_t& frame_violations) {
  const double r = state.norm();
  bool classical = true;
  switch (p.family) {
    case RegionFamily::kOrthogonalPair: {
      classical = pair_min_entry(PairGeometry::aligned(r, 0.5 * std::numbers::pi)) >= -p.eps;
      for (std::size_t t = 0; t < p.random_frames; ++t) {
        const auto f = random_frame(rng);
        const PairGeometry g(state, Direction(f[0]), Direction(f[1]));
        if (classical && pair_min_entry(g) < -p.eps) ++frame_violations;
      }
      break;
    }
    case RegionFamily::kOrthogonalTriple: {
      classical = triple_min_entry(TripleGeometry::orthogonal_aligned(state)) >= -p.eps;
      for (std::size_t t = 0; t < p.random_frames; ++t) {
        const auto f = random_frame(rng);
        const TripleGeometry g(state, Direction(f[0]), Direction(f[1]), Direction(f[2]));
        if (classical && triple_min_entry(g) < -p.eps) ++frame_violations;
      }
      break;
    }
    case RegionFamily::kFreePair: {
      for (std::size_t k = 0; k < p.geometry_steps && classical; ++k) {
        const double theta =
            std::numbers::pi * static_cast<double>(k + 1) / static_cast<double>(p.geometry_steps + 1);
        classical = pair_min_entry(PairGeometry::aligned(r, theta)) >= -p.eps;
      }
      break;
    }
  }
  return classical;
}

nlohmann::ordered_json base_metadata() {
  nlohmann::ordered_json m;
  m["tool"] = "pseudoprob";
  m["version"] = kVersion;
  m["prng"] = kPrngName;
  m["block_size"] = kScanBlockSize;
  return m;
}

}  // namespace

ScanResult scan_negativity(const NegativityScanParams& params) {
  if (params.steps < 2) throw Error(errc::kInvalidArgument, "steps must be >= 2");
  if (!(params.pnorm >= 0.0 && params.pnorm <= 1.0)) {
    throw Error(errc::kOutOfRange, "|P| outside [0, 1]");
  }
  ScanResult out;
  out.kind = "scan-negativity";
  double lo = params.theta_min;
  double hi = params.theta_max;
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error(errc::kInvalidArgument, "theta range must be finite with min <= max");
  }
  if (lo < 0.0 || lo > std::numbers::pi) {
    out.warnings.push_back("theta_min " + std::to_string(lo) + " clipped to [0, pi]");
    lo = std::clamp(lo, 0.0, std::numbers::pi);
  }
  if (hi < 0.0 || hi > std::numbers::pi) {
    out.warnings.push_back("theta_max " + std::to_string(hi) + " clipped to [0, pi]");
    hi = std::clamp(hi, 0.0, std::numbers::pi);
  }
  out.params = {{"pnorm", params.pnorm}, {"theta_min", lo}, {"theta_max", hi}, {"steps", params.steps}};
  out.columns = {"theta", "negativity"};
  const double step = (hi - lo) / static_cast<double>(params.steps - 1);
  for (std::size_t k = 0; k < params.steps; ++k) {
    const double theta = k + 1 == params.steps ? hi : lo + static_cast<double>(k) * step;
    out.rows.push_back({theta, negativity_special(params.pnorm, theta)});
  }
  const NegativityMax nm = negativity_max(params.pnorm);
  out.summary = {{"n_max", nm.value},
                 {"theta_star", nm.theta_star},
                 {"onset_theta", nonclassical_onset(params.pnorm)}};
  out.metadata = base_metadata();
  return out;
}

RegionFamily parse_region_family(const std::string& name) {
  if (name == "orthogonal-pair") return RegionFamily::kOrthogonalPair;
  if (name == "orthogonal-triple") return RegionFamily::kOrthogonalTriple;
  if (name == "free-pair") return RegionFamily::kFreePair;
  throw Error(errc::kParse, "unknown family '" + name + "'");
}

std::string to_string(RegionFamily family) {
  switch (family) {
    case RegionFamily::kOrthogonalPair: return "orthogonal-pair";
    case RegionFamily::kOrthogonalTriple: return "orthogonal-triple";
    case RegionFamily::kFreePair: return "free-pair";
  }
  return "unknown";
}

ScanResult classical_region(const ClassicalRegionParams& params) {
  if (params.samples < 1) throw Error(errc::kInvalidArgument, "samples must be >= 1");
  if (params.radial_bins < 1) throw Error(errc::kInvalidArgument, "radial_bins must be >= 1");
  if (params.family == RegionFamily::kFreePair && params.geometry_steps < 1) {
    throw Error(errc::kInvalidArgument, "geometry_steps must be >= 1");
  }
  const std::size_t bins = params.radial_bins;

  auto blocks = run_blocks(params.samples, params.threads,
                           [&](std::uint64_t b, std::uint64_t begin, std::uint64_t end) {
    RegionBlock acc{std::vector<std::uint64_t>(bins), std::vector<std::uint64_t>(bins)};
    Rng rng = stream_engine(params.seed, b);
    for (std::uint64_t i = begin; i < end; ++i) {
      const BlochVector state(random_in_ball(rng));
      const double r = state.norm();
      const bool classical = state_classical(params, state, rng, acc.frame_violations);
      const auto bin = std::min(bins - 1, static_cast<std::size_t>(r * static_cast<double>(bins)));
      ++acc.bin_total[bin];
      if (classical) {
        ++acc.bin_classical[bin];
        ++acc.classical;
      }
      if (r > 0.0) {
        ++acc.nonzero;
        if (!classical) ++acc.nonclassical_nonzero;
      }
    }
    return acc;
  });

  RegionBlock total{std::vector<std::uint64_t>(bins), std::vector<std::uint64_t>(bins)};
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < bins; ++k) {
      total.bin_total[k] += b.bin_total[k];
      total.bin_classical[k] += b.bin_classical[k];
    }
    total.classical += b.classical;
    total.nonzero += b.nonzero;
    total.nonclassical_nonzero += b.nonclassical_nonzero;
    total.frame_violations += b.frame_violations;
  }

  ScanResult out;
  out.kind = "classical-region";
  out.params = {{"family", to_string(params.family)},
                {"samples", params.samples},
                {"seed", params.seed},
                {"eps", params.eps},
                {"radial_bins", params.radial_bins}};
  if (params.family == RegionFamily::kFreePair) {
    out.params["geometry_steps"] = params.geometry_steps;
  } else {
    out.params["random_frames"] = params.random_frames;
  }
  out.columns = {"radius_lo", "radius_hi", "samples", "classical_fraction"};
  for (std::size_t k = 0; k < bins; ++k) {
    const double n = static_cast<double>(total.bin_total[k]);
    out.rows.push_back({static_cast<double>(k) / static_cast<double>(bins),
                        static_cast<double>(k + 1) / static_cast<double>(bins), n,
                        n > 0 ? static_cast<double>(total.bin_classical[k]) / n : 0.0});
  }

  const double n = static_cast<double>(params.samples);
  const double f = static_cast<double>(total.classical) / n;
  double critical = 0.0;
  double critical_exact = 0.0;
  if (params.family == RegionFamily::kOrthogonalPair) {
    critical = pair_classical_radius().radius;
    critical_exact = pair_classical_radius_exact();
  } else if (params.family == RegionFamily::kOrthogonalTriple) {
    critical = triple_classical_radius().radius;
    critical_exact = triple_classical_radius_exact();
  }
  out.summary["critical_radius"] = critical;
  out.summary["critical_radius_exact"] = critical_exact;
  out.summary["radius_fraction"] = critical;
  out.summary["euclidean_volume_fraction"] = f;
  out.summary["euclidean_volume_fraction_std_error"] = std::sqrt(f * (1.0 - f) / n);
  out.summary["euclidean_volume_fraction_exact"] = critical_exact * critical_exact * critical_exact;
  if (params.family == RegionFamily::kFreePair) {
    const double nz = static_cast<double>(total.nonzero);
    const double g = nz > 0 ? static_cast<double>(total.nonclassical_nonzero) / nz : 0.0;
    // With a finite angle grid the largest angle tried sets the residual
    // classical radius cos(theta_max / 2).
    const double theta_max = std::numbers::pi * static_cast<double>(params.geometry_steps) /
                             static_cast<double>(params.geometry_steps + 1);
    out.summary["nonclassical_fraction"] = g;
    out.summary["nonclassical_fraction_std_error"] = nz > 0 ? std::sqrt(g * (1.0 - g) / nz) : 0.0;
    out.summary["grid_critical_radius"] = std::cos(0.5 * theta_max);
  } else {
    out.summary["random_geometry_violations"] = total.frame_violations;
  }
  out.metadata = base_metadata();
  out.metadata["eps"] = params.eps;
  return out;
}

ScanResult spectrum_scan(const SpectrumScanParams& params) {
  if (params.dim < 2 || params.dim > 16) throw Error(errc::kOutOfRange, "dim must be in [2, 16]");
  if (params.rank_a < 1 || params.rank_a > params.dim || params.rank_b < 1 || params.rank_b > params.dim) {
    throw Error(errc::kOutOfRange, "ranks must be in [1, dim]");
  }
  if (params.pairs < 1) throw Error(errc::kInvalidArgument, "pairs must be >= 1");

  using Row = std::array<double, 2>;
  auto blocks = run_blocks(params.pairs, params.threads,
                           [&](std::uint64_t b, std::uint64_t begin, std::uint64_t end) {
    std::vector<Row> rows;
    Rng rng = stream_engine(params.seed, b);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::vector<HermitianOperator> pair;
      if (params.commuting) {
        const ComplexMatrix u = random_unitary(rng, params.dim);
        for (std::size_t rank : {params.rank_a, params.rank_b}) {
          std::vector<std::size_t> idx(params.dim);
          std::iota(idx.begin(), idx.end(), 0);
          std::shuffle(idx.begin(), idx.end(), rng);
          std::vector<double> diag(params.dim, 0.0);
          for (std::size_t k = 0; k < rank; ++k) diag[idx[k]] = 1.0;
          pair.push_back(HermitianOperator(u * ComplexMatrix::diagonal(diag) * u.adjoint()));
        }
      } else {
        pair.push_back(random_projector(rng, params.dim, params.rank_a));
        pair.push_back(random_projector(rng, params.dim, params.rank_b));
      }
      const PseudoProjection pp = weyl_pseudo_projection(pair);
      const SpectralAudit audit = spectral_audit(pp);
      rows.push_back({audit.min_eig, audit.commutator_norm});
    }
    return rows;
  });

  ScanResult out;
  out.kind = "spectrum";
  out.params = {{"dim", params.dim},     {"rank_a", params.rank_a}, {"rank_b", params.rank_b},
                {"pairs", params.pairs}, {"seed", params.seed},     {"commuting", params.commuting}};
  out.columns = {"pair", "min_eig", "commutator_norm"};
  std::uint64_t index = 0;
  std::uint64_t noncommuting = 0;
  std::uint64_t violations = 0;
  double worst_noncommuting = -std::numeric_limits<double>::infinity();
  double worst_commuting = std::numeric_limits<double>::infinity();
  for (const auto& block : blocks) {
    for (const auto& [min_eig, comm] : block) {
      out.rows.push_back({static_cast<double>(index++), min_eig, comm});
      if (comm > kCommutingThreshold) {
        ++noncommuting;
        worst_noncommuting = std::max(worst_noncommuting, min_eig);
        if (!(min_eig < 0.0)) ++violations;
      } else {
        worst_commuting = std::min(worst_commuting, min_eig);
        if (min_eig < -kCommutingSlack) ++violations;
      }
    }
  }
  out.summary["pairs"] = params.pairs;
  out.summary["noncommuting_pairs"] = noncommuting;
  out.summary["commuting_pairs"] = params.pairs - noncommuting;
  out.summary["violations"] = violations;
  if (noncommuting > 0) out.summary["max_min_eig_noncommuting"] = worst_noncommuting;
  if (noncommuting < params.pairs) out.summary["min_min_eig_commuting"] = worst_commuting;
  out.metadata = base_metadata();
  out.metadata["commuting_threshold"] = kCommutingThreshold;
  return out;
}

}  // namespace pseudoprob
