#include <gtest/gtest.h>

#include <cmath>

#include "kpos/combinatorics.hpp"
#include "kpos/rng.hpp"
#include "kpos/sampling.hpp"
#include "kpos/symfunc.hpp"
#include "oracles.hpp"

using namespace kpos;

TEST(EspTable, SmallSpectra) {
  const std::vector<double> ones{1, 1, 1};
  EXPECT_EQ(esp_table(ones).s, (std::vector<double>{1, 3, 3, 1}));
  const std::vector<double> x{1, 2, 3};
  const auto t = esp_table(x);
  EXPECT_EQ(t[2], 11.0);
  EXPECT_EQ(t[3], 6.0);
  EXPECT_EQ(t.n(), 3u);
  EXPECT_EQ(t[7], 0.0);
  const std::vector<double> zeros(4, 0.0);
  const auto z = esp_table(zeros);
  EXPECT_EQ(z[0], 1.0);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(z[k], 0.0);
}

TEST(EspTable, EmptySpectrum) {
  const auto t = esp_table(std::vector<double>{});
  EXPECT_EQ(t.s, (std::vector<double>{1}));
}

TEST(EspTable, MatchesSubsetOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(-3, 3);
    const auto t = esp_table(x);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_LT(oracle::rel_diff(t[k], oracle::esp(x, k)), 1e-12);
  }
}

TEST(EspNewton, AgreesWithRecurrence) {
  const std::vector<double> x{1, 2, 3};
  EXPECT_NEAR(esp_newton(x, 2), 11.0, 1e-12);
  EXPECT_EQ(esp_newton(x, 0), 1.0);
  EXPECT_NEAR(esp_newton(std::vector<double>{2, -2}, 1), 0.0, 1e-15);
  EXPECT_THROW(esp_newton(x, 4), DomainError);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> y(1 + trial % 8);
    for (double& v : y) v = rng.uniform(0.5, 2.0);
    for (std::size_t k = 0; k <= y.size(); ++k)
      EXPECT_LT(oracle::rel_diff(esp_newton(y, k), esp(y, k)), 1e-9);
  }
}

TEST(MinorSum, HandExamples) {
  EXPECT_NEAR(minor_sum(SymMatrix{{2, 1}, {1, 2}}, 2), 3.0, 1e-14);
  EXPECT_NEAR(minor_sum(SymMatrix{{1, 2}, {2, 1}}, 2), -3.0, 1e-14);
  const SymMatrix a{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}};
  EXPECT_NEAR(minor_sum(a, 1), 15.0, 1e-14);
  EXPECT_EQ(minor_sum(a, 0), 1.0);
}

TEST(MinorSum, MatchesLeibnizOracle) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const SymMatrix a = random_symmetric(n, rng);
    for (std::size_t k = 1; k <= n; ++k)
      EXPECT_LT(oracle::rel_diff(minor_sum(a, k), oracle::minor_sum(a, k)), 1e-10);
  }
}

TEST(SkMatrix, ExamplesAndRouteEquivalence) {
  EXPECT_NEAR(sk_matrix(SymMatrix::identity(4), 2), 6.0, 1e-13);
  EXPECT_NEAR(sk_matrix(SymMatrix{{2, 1}, {1, 2}}, 2), 3.0, 1e-13);
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const SymMatrix a = random_symmetric(n, rng);
    const auto t = sk_table(a);
    for (std::size_t k = 1; k <= n; ++k) {
      const double e = minor_sum(a, k);
      EXPECT_LE(std::abs(t[k] - e), 1e-8 * (1 + std::abs(e)));
    }
  }
}

TEST(SkCharpoly, ExamplesAndAgreement) {
  EXPECT_EQ(sk_charpoly(SymMatrix::diagonal(std::vector<double>{1, 2, 3})).s,
            (std::vector<double>{1, 6, 11, 6}));
  const auto id = sk_charpoly(SymMatrix::identity(6));
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_NEAR(id[k], static_cast<double>(binomial(6, k)), 1e-10);

  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const SymMatrix a = random_symmetric(n, rng, -10, 10);
    const auto cp = sk_charpoly(a);
    const auto ev = sk_table(a);
    const SymMatrix b = conjugate(a, haar_orthogonal(n, rng));
    const auto cpb = sk_charpoly(b);
    double scale = 0.0;
    for (std::size_t k = 0; k <= n; ++k) scale = std::max(scale, std::abs(ev[k]));
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_LE(std::abs(cp[k] - ev[k]), 1e-8 * (std::abs(ev[k]) + scale * 1e-3 + 1)) << n << " " << k;
      EXPECT_LE(std::abs(cp[k] - cpb[k]), 1e-8 * (std::abs(cp[k]) + scale * 1e-3 + 1));
    }
  }
}

TEST(SkPartial, TraceCaseAndDiagonalIdentity) {
  Rng rng(14);
  const SymMatrix a = random_symmetric(5, rng);
  EXPECT_EQ(sk_partial(a, 1, 2, 2), 1.0);
  EXPECT_EQ(sk_partial(a, 1, 1, 3), 0.0);
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t i = 0; i < 5; ++i)
      EXPECT_LT(oracle::rel_diff(sk_partial(a, k, i, i), minor_sum(delete_index(a, i), k - 1)), 1e-10);
}

TEST(SkPartial, MatchesCentralDifferenceOracle) {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-5, 5);
    const std::size_t k = 1 + rng.below(n), i = rng.below(n), j = rng.below(n);
    const double h = 1e-6 * (1 + m.max_abs());
    const double fd = oracle::central_difference(
        [k](const Matrix& x) { return oracle::minor_sum(x, k); }, m, i, j, h);
    const double exact = sk_partial(m, k, i, j);
    EXPECT_LE(std::abs(fd - exact), 1e-5 * std::max(1.0, std::abs(exact)));
  }
}

TEST(SkPartial, EulerRelation) {
  Rng rng(16);
  const SymMatrix a = random_symmetric(6, rng);
  for (std::size_t k = 1; k <= 6; ++k) {
    const Matrix g = sk_gradient(a, k);
    double s = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) s += a(i, j) * g(i, j);
    EXPECT_LT(oracle::rel_diff(s, k * minor_sum(a, k)), 1e-9);
  }
}

TEST(DiagEsp, Examples) {
  EXPECT_EQ(diag_esp(SymMatrix{{2, 1}, {1, 2}}, 2), 4.0);
  const SymMatrix a{{1, 5, 0}, {5, 2, 0}, {0, 0, 3}};
  EXPECT_EQ(diag_esp(a, 1), a.trace());
  const auto d = SymMatrix::diagonal(std::vector<double>{1, -2, 4});
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_NEAR(diag_esp(d, k), sk_matrix(d, k), 1e-12);
}

TEST(Combinatorics, BinomialAndLexOrder) {
  EXPECT_EQ(binomial(8, 4), 70u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  std::vector<std::vector<std::size_t>> seen;
  for_each_combination(4, 2, [&](std::span<const std::size_t> c) { seen.emplace_back(c.begin(), c.end()); });
  EXPECT_EQ(seen, oracle::lex_tuples(4, 2));
}
