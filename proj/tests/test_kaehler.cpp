#include <gtest/gtest.h>

#include "energized/connection.hpp"
#include "energized/kaehler.hpp"
#include "energized/random.hpp"
#include "oracles.hpp"

using namespace energized;

namespace {

IntMatrix gram(const IntMatrix& a) {
  IntMatrix g(a.cols(), a.cols(), 0);
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l)
      for (std::size_t r = 0; r < a.rows(); ++r) g(k, l) += a(r, k) * a(r, l);
  return g;
}

mpz_class pow3(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

/// Shifts all vertices of s by `offset` so it becomes disjoint from others.
std::vector<Simplex> shifted(const SetSystem& s, int offset) {
  std::vector<Simplex> out;
  for (auto x : s) {
    for (auto& v : x) v += offset;
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Jacobian, ColumnsAreConnectionMatricesOfBasisFields) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto s = (t % 2) ? random_complex(rng) : random_set_system(rng, 6, 4);
    const std::size_t n = s.size();
    const auto a = jacobian_dr(s);
    ASSERT_EQ(a.rows(), n * n);
    for (std::size_t k = 0; k < n; ++k) {
      EnergyFunction<double> e(n, 0.0);
      e[k] = 1.0;
      const auto L = oracle::connection_L(s, e);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) EXPECT_EQ(a(x * n + y, k), static_cast<long long>(L(x, y)));
    }
  }
}

TEST(Jacobian, EdgeEntries) {
  // L of the edge with h = [U, V, W] is [[U,0,U],[0,V,V],[U,V,U+V+W]].
  const auto a = jacobian_dr(generate({{1, 2}}));
  const std::vector<std::vector<long long>> U{{1, 0, 1}, {0, 0, 0}, {1, 0, 1}};
  const std::vector<std::vector<long long>> V{{0, 0, 0}, {0, 1, 1}, {0, 1, 1}};
  const std::vector<std::vector<long long>> W{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      EXPECT_EQ(a(3 * x + y, 0), U[x][y]);
      EXPECT_EQ(a(3 * x + y, 1), V[x][y]);
      EXPECT_EQ(a(3 * x + y, 2), W[x][y]);
    }
}

TEST(Jacobian, SingleSet) {
  const auto a = jacobian_dr(SetSystem({{1, 2, 3}}));
  EXPECT_EQ(a.rows(), 1u);
  EXPECT_EQ(a(0, 0), 1);
}

TEST(Form, IsGramOfJacobian) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto s = (t % 2) ? random_complex(rng) : random_set_system(rng, 7, 5);
    const auto f = kaehler_form(s);
    EXPECT_TRUE(f == gram(jacobian_dr(s)));
    for (std::size_t k = 0; k < f.rows(); ++k)
      for (std::size_t l = 0; l < f.cols(); ++l) {
        EXPECT_EQ(f(k, l), f(l, k));
        EXPECT_GE(f(k, l), 0);
      }
  }
}

TEST(Form, ZeroDimensionalIsIdentity) {
  const auto r = kaehler_report(SetSystem({{1}, {2}}));
  EXPECT_TRUE(r.form == IntMatrix::from_rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(r.det, 1);
}

TEST(ExactDet, AgreesWithRationalElimination) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 7));
    IntMatrix m(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.integer(-3, 3);
    Matrix<GaussianRational> q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = GaussianRational(static_cast<long>(m(i, j)));
    const GaussianRational want = leibniz_det(q);
    EXPECT_EQ(mpq_class(exact_det(m)), want.re);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(IntMatrix::from_rows({{0, 0}, {0, 0}})), 0u);
  EXPECT_EQ(rank(IntMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {1, 1, 3}})), 2u);
  EXPECT_EQ(rank(jacobian_dr(generate({{1, 2, 3}}))), 7u);
}

TEST(Factorize, SmallAndLarge) {
  const auto f = factorize(mpz_class(360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(factorization_string(f), "2^3 * 3^2 * 5");
  EXPECT_TRUE(factorize(mpz_class(1)).empty());
  EXPECT_TRUE(factorize(mpz_class(0)).empty());
  // 1000003 is prime and above the trial bound.
  const auto big = factorize(mpz_class(9) * 1000003);
  ASSERT_EQ(big.size(), 2u);
  EXPECT_EQ(big[1].prime, 1000003);
  EXPECT_TRUE(big[1].certified_prime);
}

TEST(KaehlerDet, CompleteComplexes) {
  EXPECT_EQ(kaehler_report(oracle::complete(2)).det, 9);
  EXPECT_EQ(kaehler_report(oracle::complete(3)).det, 19683);
  EXPECT_EQ(kaehler_report(oracle::complete(4)).det, pow3(28));
}

TEST(KaehlerDet, ClosedFormExponentForSmallComplete) {
  for (unsigned long n = 2; n <= 4; ++n) {
    unsigned long e = 0;
    for (unsigned long k = 1; k < n; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), n, k);
      e += binom.get_ui() * (n - k);
    }
    EXPECT_EQ(kaehler_report(oracle::complete(static_cast<int>(n))).det, pow3(e)) << "n = " << n;
  }
}

TEST(KaehlerDet, FiftyFiveElementComplex) {
  const auto s = generate({{1, 2, 3, 4, 5}, {3, 4, 5, 6, 7}});
  ASSERT_EQ(s.size(), 55u);
  const auto r = kaehler_report(s, false);
  mpz_class five7, seven7;
  mpz_ui_pow_ui(five7.get_mpz_t(), 5, 7);
  mpz_ui_pow_ui(seven7.get_mpz_t(), 7, 7);
  EXPECT_EQ(r.det, pow3(113) * five7 * seven7);
  EXPECT_EQ(factorization_string(r.factorization), "3^113 * 5^7 * 7^7");
  EXPECT_EQ(r.rank, 55u);
}

TEST(KaehlerDet, MultipliesOverDisjointUnions) {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    ComplexShape shape;
    shape.max_vertices = 4;
    shape.max_generators = 3;
    const auto a = random_complex(rng, shape), b = random_complex(rng, shape);
    auto sets = a.elements();
    const auto moved = shifted(b, 10);
    sets.insert(sets.end(), moved.begin(), moved.end());
    const SetSystem u(sets);
    EXPECT_EQ(exact_det(kaehler_form(u)), exact_det(kaehler_form(a)) * exact_det(kaehler_form(b)));
  }
}

TEST(KaehlerDet, FullRankOnGeneratedComplexes) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto s = random_complex(rng);
    const auto r = kaehler_report(s, false);
    EXPECT_EQ(r.rank, s.size());
    EXPECT_GT(r.det, 0);
  }
}

TEST(Divisibility, ScanFlagsExemptSystems) {
  const auto scan = divisibility_scan({SetSystem({{1}, {2}, {3}}), generate({{1, 2}})});
  ASSERT_EQ(scan.size(), 2u);
  EXPECT_EQ(scan[0].det, 1);
  EXPECT_TRUE(scan[0].exempt);
  EXPECT_EQ(scan[0].dimension, 0);
  EXPECT_FALSE(scan[1].exempt);
  EXPECT_TRUE(scan[1].divisible_by_3);
  EXPECT_EQ(scan[1].dimension, 1);
}
