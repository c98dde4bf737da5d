#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pseudoprob/error.hpp"
#include "pseudoprob/qubit_forms.hpp"
#include "pseudoprob/random.hpp"
#include "pseudoprob/scheme.hpp"

using namespace pseudoprob;

namespace {

std::vector<Observable> qubit_obs(const std::vector<Direction>& dirs) {
  std::vector<Observable> out;
  for (const auto& d : dirs) out.push_back(Observable::qubit(d));
  return out;
}

std::vector<Direction> coplanar() {
  const auto g = TripleGeometry::coplanar120(BlochVector({0.0, 0.0, 0.0}));
  return {g.m().begin(), g.m().end()};
}

DensityMatrix mixed() { return DensityMatrix::maximally_mixed(2); }

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

double total(const Scheme& s) {
  double t = 0.0;
  for (double v : s.values()) t += v;
  return t;
}

}  // namespace

TEST(CanonicalTuples, LexicographicFirstSlowest) {
  const std::vector<std::size_t> counts{2, 3};
  const auto t = canonical_tuples(counts);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0], (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(t[1], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(t[3], (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(t[5], (std::vector<std::size_t>{1, 2}));
}

TEST(BuildScheme, SingleObservableIsBorn) {
  const auto s = build_scheme(mixed(), qubit_obs({Direction::z()}), OrderingRecipe::weyl());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.entries()[0].outcomes, std::vector<double>{1.0});
  EXPECT_EQ(s.entries()[0].p, 0.5);
  EXPECT_EQ(s.entries()[1].p, 0.5);
  EXPECT_TRUE(classify(s).classical);
}

TEST(BuildScheme, OrthogonalPairMixedIsUniform) {
  const auto s = build_scheme(mixed(), qubit_obs({Direction::z(), Direction::x()}), OrderingRecipe::weyl());
  for (const auto& e : s.entries()) EXPECT_NEAR(e.p, 0.25, 1e-15);
  EXPECT_TRUE(classify(s).classical);
  EXPECT_EQ(negativity(s), 0.0);
}

TEST(BuildScheme, CoplanarMixedTriple) {
  const auto s = build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::weyl());
  ASSERT_EQ(s.size(), 8u);
  for (const auto& e : s.entries()) {
    const bool extreme = e.outcomes == std::vector<double>{1, 1, 1} || e.outcomes == std::vector<double>{-1, -1, -1};
    EXPECT_NEAR(e.p, extreme ? -1.0 / 16 : 3.0 / 16, 1e-12);
  }
  EXPECT_NEAR(negativity(s), 0.125, 1e-12);
  const auto c = classify(s);
  EXPECT_FALSE(c.classical);
  ASSERT_EQ(c.negative_entries.size(), 2u);
  EXPECT_LE(c.negative_entries[0].p, c.negative_entries[1].p);
}

TEST(BuildScheme, UnitRecipesAtZeroPolarisationCoincide) {
  // Re Tr of a product of qubit projectors is order independent, so at P = 0
  // every ordering gives the same entries.
  const auto weyl = build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::weyl()).values();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto unit = build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::unit(k)).values();
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(unit[i], weyl[i], 1e-15);
  }
}

TEST(BuildScheme, UnitRecipesDifferFromWeylAwayFromCentre) {
  const auto rho = density_from_bloch(BlochVector({0.3, 0.0, 0.4}));
  const auto weyl = build_scheme(rho, qubit_obs(coplanar()), OrderingRecipe::weyl()).values();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto s = build_scheme(rho, qubit_obs(coplanar()), OrderingRecipe::unit(k));
    double diff = 0.0;
    for (std::size_t i = 0; i < 8; ++i) diff = std::max(diff, std::abs(s.values()[i] - weyl[i]));
    EXPECT_GT(diff, 1e-3) << "unit " << k;
  }
}

TEST(BuildScheme, ErrorsAndGuards) {
  EXPECT_EQ(error_code([] { build_scheme(mixed(), {}, OrderingRecipe::weyl()); }), errc::kInvalidArgument);
  EXPECT_EQ(error_code([] { build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::unit(3)); }),
            errc::kInvalidRecipe);
  EXPECT_EQ(error_code([] {
              build_scheme(DensityMatrix::maximally_mixed(3), qubit_obs({Direction::z()}), OrderingRecipe::weyl());
            }),
            errc::kDimMismatch);
  EXPECT_EQ(error_code([] {
              build_scheme(mixed(), qubit_obs(std::vector<Direction>(9, Direction::z())), OrderingRecipe::weyl());
            }),
            errc::kOrderingExplosion);
}

TEST(Scheme, ConstructorValidates) {
  const auto s = build_scheme(mixed(), qubit_obs({Direction::z()}), OrderingRecipe::weyl());
  auto entries = s.entries();
  entries[0].p = 0.6;
  EXPECT_EQ(error_code([&] { Scheme(s.observables(), entries, s.recipe(), s.state()); }), errc::kNotNormalized);
  entries.pop_back();
  EXPECT_EQ(error_code([&] { Scheme(s.observables(), entries, s.recipe(), s.state()); }), errc::kInvalidArgument);
}

TEST(Scheme, AtAndPosition) {
  const auto s = build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::weyl());
  const std::vector<std::size_t> idx{1, 0, 1};
  EXPECT_EQ(s.position(idx), 5u);
  EXPECT_EQ(s.at(idx).outcomes, (std::vector<double>{-1, 1, -1}));
}

TEST(Marginal, PairOntoFirstIsBorn) {
  oracle::Gen g(41);
  for (int k = 0; k < 500; ++k) {
    const BlochVector p(oracle::in_ball(g));
    const Direction m1(oracle::unit_vector(g)), m2(oracle::unit_vector(g));
    const auto s = build_scheme(density_from_bloch(p), qubit_obs({m1, m2}), OrderingRecipe::weyl());
    const std::vector<std::size_t> keep{0};
    const auto m = marginal(s, keep);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_NEAR(m.entries()[0].p, 0.5 * (1 + dot(p.p(), m1.m())), 1e-12);
    EXPECT_NEAR(m.entries()[1].p, 0.5 * (1 - dot(p.p(), m1.m())), 1e-12);
  }
}

TEST(Marginal, CoplanarPairsAreNonNegative) {
  const auto s = build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::weyl());
  for (const auto& keep : std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}) {
    const auto m = marginal(s, keep);
    ASSERT_EQ(m.size(), 4u);
    // Direct summation oracle over the discarded slot.
    for (std::size_t e = 0; e < 4; ++e) {
      double sum = 0.0;
      for (const auto& full : s.entries()) {
        if (full.index[keep[0]] == m.entries()[e].index[0] && full.index[keep[1]] == m.entries()[e].index[1]) {
          sum += full.p;
        }
      }
      EXPECT_NEAR(m.entries()[e].p, sum, 1e-15);
      EXPECT_GE(m.entries()[e].p, 0.0);
    }
    EXPECT_TRUE(classify(m).classical);
  }
}

TEST(Marginal, KeepAllIsIdentityAndErrors) {
  const auto s = build_scheme(mixed(), qubit_obs(coplanar()), OrderingRecipe::weyl());
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(marginal(s, all).values(), s.values());
  EXPECT_EQ(error_code([&] { marginal(s, std::vector<std::size_t>{}); }), errc::kInvalidSubset);
  EXPECT_EQ(error_code([&] { marginal(s, std::vector<std::size_t>{0, 0}); }), errc::kInvalidSubset);
  EXPECT_EQ(error_code([&] { marginal(s, std::vector<std::size_t>{3}); }), errc::kInvalidSubset);
}

TEST(Negativity, AlignedPurePair) {
  const auto g = PairGeometry::aligned(1.0, std::numbers::pi / 2);
  const auto s = build_scheme(density_from_bloch(g.p()), qubit_obs({g.m1(), g.m2()}), OrderingRecipe::weyl());
  EXPECT_NEAR(negativity(s), (std::sqrt(2.0) - 1) / 4, 1e-12);
  const auto c = classify(s);
  EXPECT_FALSE(c.classical);
  EXPECT_EQ(c.negative_entries.size(), 1u);
}

TEST(SchemeProperties, RandomQubitSchemes) {
  oracle::Gen g(42);
  std::uniform_int_distribution<int> nd(1, 4);
  std::uniform_int_distribution<int> rd(0, 2);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = nd(g);
    std::vector<Direction> dirs;
    for (int k = 0; k < n; ++k) dirs.emplace_back(oracle::unit_vector(g));
    const BlochVector p(oracle::in_ball(g));
    const auto rho = density_from_bloch(p);
    const auto classes = ordering_classes(n).size();
    std::vector<OrderingRecipe> recipes{OrderingRecipe::weyl(), OrderingRecipe::unit(trial % classes)};
    std::vector<double> w(classes, 0.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double sum = 0.0;
    for (auto& x : w) sum += (x = u(g));
    for (auto& x : w) x /= sum;
    w.back() = 1.0;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) w.back() -= w[k];
    if (w.back() >= 0.0) recipes.push_back(OrderingRecipe::weights(w));

    for (const auto& recipe : recipes) {
      const auto s = build_scheme(rho, qubit_obs(dirs), recipe);
      EXPECT_NEAR(total(s), 1.0, 1e-10);
      for (int k = 0; k < n; ++k) {
        const std::vector<std::size_t> keep{static_cast<std::size_t>(k)};
        const auto m = marginal(s, keep);
        EXPECT_NEAR(m.entries()[0].p, 0.5 * (1 + dot(p.p(), dirs[k].m())), 1e-10);
      }
      const double neg = negativity(s);
      EXPECT_EQ(neg <= 1e-10, classify(s).classical) << neg;
    }

    // Flipping one direction relabels that slot.
    const std::size_t flip = trial % n;
    auto flipped_dirs = dirs;
    flipped_dirs[flip] = dirs[flip].flipped();
    const auto a = build_scheme(rho, qubit_obs(dirs), OrderingRecipe::weyl());
    const auto b = build_scheme(rho, qubit_obs(flipped_dirs), OrderingRecipe::weyl());
    for (const auto& e : a.entries()) {
      auto idx = e.index;
      idx[flip] = 1 - idx[flip];
      EXPECT_NEAR(b.at(idx).p, e.p, 1e-12);
    }
  }
}

TEST(SchemeProperties, PairsHaveAtMostOneNegativeEntry) {
  oracle::Gen g(43);
  for (int trial = 0; trial < 5000; ++trial) {
    const BlochVector p(oracle::in_ball(g));
    const auto s = build_scheme(density_from_bloch(p),
                                qubit_obs({Direction(oracle::unit_vector(g)), Direction(oracle::unit_vector(g))}),
                                OrderingRecipe::weyl());
    EXPECT_LE(classify(s, 0.0).negative_entries.size(), 1u);
  }
}

TEST(SchemeProperties, MatchesEigenOracle) {
  oracle::Gen g(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Direction> dirs;
    std::vector<std::array<double, 3>> raw;
    for (int k = 0; k < n; ++k) {
      raw.push_back(oracle::unit_vector(g));
      dirs.emplace_back(raw.back());
    }
    const auto p = oracle::in_ball(g);
    const auto s = build_scheme(density_from_bloch(BlochVector(p)), qubit_obs(dirs), OrderingRecipe::weyl());
    for (const auto& e : s.entries()) {
      std::vector<int> signs;
      for (double a : e.outcomes) signs.push_back(static_cast<int>(a));
      EXPECT_NEAR(e.p, oracle::qubit_weyl_entry(p, raw, signs), 1e-13);
    }
  }
}

TEST(SchemeProperties, GenericQutritObservables) {
  Rng rng = stream_engine(45, 0);
  for (int trial = 0; trial < 30; ++trial) {
    // Two observables on a qutrit with random eigenbases.
    std::vector<Observable> obs;
    for (int o = 0; o < 2; ++o) {
      const ComplexMatrix u = random_unitary(rng, 3);
      std::vector<ResolutionTerm> res;
      HermitianOperator op = HermitianOperator::zero(3);
      for (int k = 0; k < 3; ++k) {
        std::vector<double> d(3, 0.0);
        d[k] = 1.0;
        HermitianOperator pk(u * ComplexMatrix::diagonal(d) * u.adjoint());
        op = op + double(k - 1) * pk;
        res.push_back({double(k - 1), pk});
      }
      obs.emplace_back(op, res);
    }
    const ComplexMatrix v = random_unitary(rng, 3);
    const std::vector<double> w{0.5, 0.3, 0.2};
    const DensityMatrix rho(HermitianOperator(v * ComplexMatrix::diagonal(w) * v.adjoint()));
    const auto s = build_scheme(rho, obs, OrderingRecipe::weyl());
    ASSERT_EQ(s.size(), 9u);
    EXPECT_NEAR(total(s), 1.0, 1e-10);
    for (const auto& e : s.entries()) {
      const std::vector<oracle::Mat> ps{oracle::to_eigen(obs[0].resolution()[e.index[0]].projector),
                                        oracle::to_eigen(obs[1].resolution()[e.index[1]].projector)};
      EXPECT_NEAR(e.p, oracle::expectation(oracle::to_eigen(rho.op()), oracle::weyl(ps)), 1e-13);
    }
  }
}
