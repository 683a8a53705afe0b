#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <complex>

#include "energized/identities.hpp"
#include "energized/random.hpp"
#include "oracles.hpp"

using namespace energized;
using C = std::complex<double>;

TEST(GreenStar, SeventhRootsOnTriangle) {
  const auto k3 = generate({{1, 2, 3}});
  const auto r = green_star_check(k3, roots_of_unity(7));
  EXPECT_TRUE(r.identity.applicable);
  EXPECT_TRUE(r.identity.holds);
  EXPECT_LT(r.identity.max_abs_deviation, 1e-9);
  EXPECT_TRUE(r.upper_triangular);
}

TEST(GreenStar, NonComplexIsNotIdentity) {
  const SetSystem s({{1, 3, 4}, {4}});
  const auto r = green_star_check(s, EnergyFunction<double>{1, 1});
  EXPECT_FALSE(r.identity.applicable);
  EXPECT_FALSE(r.identity.holds);
  EXPECT_FALSE(r.identity.failed());
  EXPECT_TRUE(r.gbar_L == Matrix<double>::from_rows({{3, 2}, {4, 3}}));
  EXPECT_FALSE(r.identity.witnesses.empty());
}

TEST(GreenStar, UnitFieldsGiveInverse) {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    const auto s = random_complex(rng);
    const auto rc = green_star_check(s, random_unit_field<C>(rng, s.size()));
    EXPECT_TRUE(rc.identity.holds) << rc.identity.max_abs_deviation;
    const auto rq = green_star_check(s, random_unit_field<Quaternion>(rng, s.size()));
    EXPECT_TRUE(rq.identity.holds) << rq.identity.max_abs_deviation;
    const auto rg = green_star_check(s, random_unit_field<GaussianRational>(rng, s.size()));
    EXPECT_TRUE(rg.identity.holds);
    EXPECT_EQ(rg.identity.max_abs_deviation, 0.0);
  }
}

TEST(GreenStar, NonUnitFieldsKeepDiagonalNorms) {
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const auto s = random_complex(rng);
    auto h = random_unit_field<C>(rng, s.size());
    const std::size_t bad = static_cast<std::size_t>(rng.integer(0, static_cast<long>(s.size()) - 1));
    h[bad] *= 1.5;
    const auto r = green_star_check(s, h);
    EXPECT_FALSE(r.identity.applicable);
    EXPECT_FALSE(r.identity.holds);
    EXPECT_TRUE(r.diagonal_matches_norms);
    EXPECT_TRUE(r.upper_triangular);
    EXPECT_NEAR(r.gbar_L(bad, bad).real(), 2.25, 1e-12);
  }
}

TEST(GreenStar, OffDiagonalIsDifferenceOfNorms) {
  // Ascending order: (g* L)(x,y) for x a vertex of edge y is |h(x)|^2 - |h(y)|^2.
  const auto k2 = generate({{1, 2}});
  const EnergyFunction<C> h{C(2, 0), C(0, 3), C(1, 1)};
  const auto r = green_star_check(k2, h);
  EXPECT_NEAR(r.gbar_L(0, 2).real(), 4.0 - 2.0, 1e-12);
  EXPECT_NEAR(r.gbar_L(1, 2).real(), 9.0 - 2.0, 1e-12);
}

TEST(Energy, EdgeSumsToTotal) {
  const auto k2 = generate({{1, 2}});
  Rng rng(3);
  for (int t = 0; t < 3; ++t) {
    const auto h = random_field<C>(rng, 3);
    const auto r = energy_theorem_check(k2, h);
    EXPECT_TRUE(r.holds);
  }
  EXPECT_TRUE(energy_theorem_check(k2, EnergyFunction<double>{0, 0, 0}).holds);
}

TEST(Energy, TriangleWithOmegaIsEuler) {
  const auto k3 = generate({{1, 2, 3}});
  const auto cm = build(k3, omega_field<double>(k3));
  double sum = 0;
  for (double v : cm.g.data()) sum += v;
  EXPECT_EQ(sum, 1.0);
  EXPECT_TRUE(energy_theorem_check(k3, omega_field<double>(k3)).holds);
}

TEST(Energy, HoldsForEveryKind) {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_complex(rng);
    EXPECT_TRUE(energy_theorem_check(s, random_field<GaussianRational>(rng, s.size())).holds);
    EXPECT_TRUE(energy_theorem_check(s, random_field<C>(rng, s.size())).holds);
    EXPECT_TRUE(energy_theorem_check(s, random_field<Quaternion>(rng, s.size())).holds);
    EXPECT_TRUE(energy_theorem_check(s, random_field<Octonion>(rng, s.size())).holds);
  }
}

TEST(Energy, FailsOffComplexesAndSaysWhy) {
  const SetSystem s({{1, 3, 4}, {4}});
  const auto r = energy_theorem_check(s, EnergyFunction<double>{1, 1});
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.applicability, "not a simplicial complex");
  EXPECT_FALSE(r.holds);
}

TEST(GaussBonnet, Examples) {
  const auto k2 = generate({{1, 2}});
  const auto cm = build(k2, omega_field<double>(k2));
  EXPECT_EQ(super_trace(cm.g, std::span<const int>(cm.signs)), 1.0);
  EXPECT_TRUE(gauss_bonnet_check(SetSystem({{1}, {2}, {3}}), EnergyFunction<double>{3, -2, 7}).holds);
  Rng rng(5);
  const auto path = generate({{1, 2}, {2, 3}});
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(gauss_bonnet_check(path, random_field<C>(rng, path.size())).holds);
}

TEST(GaussBonnet, HoldsForEveryKind) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_complex(rng);
    EXPECT_TRUE(gauss_bonnet_check(s, random_field<GaussianRational>(rng, s.size())).holds);
    EXPECT_TRUE(gauss_bonnet_check(s, random_field<Quaternion>(rng, s.size())).holds);
    EXPECT_TRUE(gauss_bonnet_check(s, random_field<Octonion>(rng, s.size())).holds);
  }
}

TEST(Unimodular, Examples) {
  const auto k2 = unimodularity_check(generate({{1, 2}}));
  EXPECT_TRUE(k2.holds);
  EXPECT_NE(std::find(k2.notes.begin(), k2.notes.end(), "det(L) = -1, prod omega = -1"), k2.notes.end());
  const auto k3 = unimodularity_check(generate({{1, 2, 3}}));
  EXPECT_TRUE(k3.holds);
  EXPECT_NE(std::find(k3.notes.begin(), k3.notes.end(), "det(L) = -1, prod omega = -1"), k3.notes.end());
  EXPECT_TRUE(unimodularity_check(SetSystem(std::vector<Simplex>{{1}})).holds);
}

TEST(Unimodular, RandomComplexes) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) EXPECT_TRUE(unimodularity_check(random_complex(rng)).holds);
}

TEST(Signature, Examples) {
  const auto k2 = generate({{1, 2}});
  EXPECT_EQ(spectral_signature_check(k2, omega_field<double>(k2)).negative_values, 1u);
  const auto ones = EnergyFunction<double>(3, 1.0);
  const auto r1 = spectral_signature_check(k2, ones);
  EXPECT_EQ(r1.negative_eigenvalues, 0u);
  EXPECT_TRUE(r1.identity.holds);
  const auto k3 = generate({{1, 2, 3}});
  const auto r2 = spectral_signature_check(k3, omega_field<double>(k3));
  EXPECT_EQ(r2.negative_eigenvalues, 3u);
  const auto r3 = spectral_signature_check(SetSystem({{1}, {2}}), EnergyFunction<double>{-1, 2});
  EXPECT_EQ(r3.negative_eigenvalues, 1u);
  EXPECT_THROW(spectral_signature_check(k2, EnergyFunction<double>{1, 0, 1}), Error);
}

TEST(Signature, RandomRealFields) {
  Rng rng(8);
  int accepted = 0;
  while (accepted < 30) {
    const auto s = random_complex(rng);
    const auto h = random_field<double>(rng, s.size());
    const auto r = spectral_signature_check(s, h);
    if (r.min_abs_eigenvalue <= 1e-6) continue;
    ++accepted;
    EXPECT_TRUE(r.identity.holds) << r.identity.notes.front();
  }
}

TEST(Symplectic, SpectrumOfGIsInverseSpectrumOfL) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto s = random_complex(rng);
    const auto cm = build(s, omega_field<double>(s));
    const std::size_t n = s.size();
    Eigen::MatrixXd L(n, n), G(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        L(i, j) = cm.L(i, j);
        G(i, j) = cm.g(i, j);
      }
    Eigen::VectorXd el = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(L).eigenvalues();
    Eigen::VectorXd eg = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(G).eigenvalues();
    std::vector<double> inv(el.data(), el.data() + n), gv(eg.data(), eg.data() + n);
    for (auto& v : inv) v = 1.0 / v;
    std::sort(inv.begin(), inv.end());
    std::sort(gv.begin(), gv.end());
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(inv[k], gv[k], 1e-8 * std::max(1.0, std::fabs(gv[k])));
  }
}

TEST(Spheres, ChainDpMatchesChainEnumeration) {
  Rng rng(10);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_complex(rng);
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::vector<std::size_t> below, above, both;
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (y == x) continue;
        if (oracle::subset(s[y], s[x])) below.push_back(y);
        if (oracle::subset(s[x], s[y])) above.push_back(y);
      }
      both = below;
      both.insert(both.end(), above.begin(), above.end());
      EXPECT_EQ(sphere_euler(s, x, Sphere::Stable), oracle::chain_euler(s, below));
      EXPECT_EQ(sphere_euler(s, x, Sphere::Unstable), oracle::chain_euler(s, above));
      EXPECT_EQ(sphere_euler(s, x, Sphere::Unit), oracle::chain_euler(s, both));
    }
  }
}

TEST(Spheres, JoinGenusIsMultiplicative) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) EXPECT_TRUE(join_genus_check(random_complex(rng)).holds);
  // The stable sphere of a k-simplex is a (k-1)-sphere, so 1 - chi = omega.
  const auto k3 = generate({{1, 2, 3}});
  for (std::size_t x = 0; x < k3.size(); ++x) EXPECT_EQ(1 - sphere_euler(k3, x, Sphere::Stable), omega(k3[x]));
}
