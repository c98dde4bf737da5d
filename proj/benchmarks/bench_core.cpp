#include <benchmark/benchmark.h>

#include "pseudoprob/qubit_forms.hpp"
#include "pseudoprob/random.hpp"
#include "pseudoprob/scan.hpp"
#include "pseudoprob/scheme.hpp"

using namespace pseudoprob;

static void BM_EigenHermitian(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng = stream_engine(1, 0);
  const auto a = random_projector(rng, dim, dim / 2);
  const auto b = random_projector(rng, dim, 1);
  const auto h = symmetrized_product(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_hermitian(h));
}
BENCHMARK(BM_EigenHermitian)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_UnitPseudoProjections(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = stream_engine(2, 0);
  std::vector<HermitianOperator> projs;
  for (std::size_t i = 0; i < n; ++i) {
    projs.push_back(projector_from_direction(Direction(random_unit_vector(rng)), Outcome::plus()));
  }
  for (auto _ : state) benchmark::DoNotOptimize(unit_pseudo_projections(projs));
}
BENCHMARK(BM_UnitPseudoProjections)->DenseRange(2, 6);

static void BM_BuildScheme(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = stream_engine(3, 0);
  const auto rho = density_from_bloch(BlochVector(random_in_ball(rng)));
  std::vector<Observable> obs;
  for (std::size_t i = 0; i < n; ++i) obs.push_back(Observable::qubit(Direction(random_unit_vector(rng))));
  for (auto _ : state) benchmark::DoNotOptimize(build_scheme(rho, obs, OrderingRecipe::weyl()));
}
BENCHMARK(BM_BuildScheme)->DenseRange(2, 4);

static void BM_TripleClosedForm(benchmark::State& state) {
  const auto g = TripleGeometry::coplanar120(BlochVector({0.1, 0.2, 0.3}));
  for (auto _ : state) benchmark::DoNotOptimize(triple_scheme_weyl_closed(g));
}
BENCHMARK(BM_TripleClosedForm);

static void BM_CoarseGraining(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = stream_engine(4, 0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) sum += (x = normal(rng));
  for (auto& x : v) x += (1.0 - sum) / static_cast<double>(n);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_coarse_graining(v));
}
BENCHMARK(BM_CoarseGraining)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_ClassicalRegion(benchmark::State& state) {
  ClassicalRegionParams p;
  p.samples = 10000;
  p.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(classical_region(p));
}
BENCHMARK(BM_ClassicalRegion)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
