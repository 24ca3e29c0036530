#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "kpos/cones.hpp"
#include "kpos/derivation.hpp"
#include "kpos/eigen.hpp"
#include "kpos/hyperbolic.hpp"
#include "kpos/rng.hpp"
#include "kpos/sampling.hpp"
#include "kpos/symfunc.hpp"
#include "oracles.hpp"

using namespace kpos;

namespace {
std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

std::vector<double> gaussian(Rng& rng, std::size_t n, double shift = 0.0) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal() + shift;
  return x;
}
}  // namespace

TEST(Restriction, SkClosedFormExample) {
  const auto p = make_sk_poly(3, 2);
  const std::vector<double> x{1, 2, 3};
  const auto c = univariate_restriction(p, ones(3), x);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c[0], 11.0, 1e-13);
  EXPECT_NEAR(c[1], 12.0, 1e-13);
  EXPECT_NEAR(c[2], 3.0, 1e-13);
  EXPECT_EQ(sk_restriction_ones(x, 2), c);
}

TEST(Restriction, InterpolationAgreesWithClosedForms) {
  Rng rng(51);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto p = make_sk_poly(n, k);
      const auto a = gaussian(rng, n, 2.0);
      const auto x = gaussian(rng, n);
      const auto exact = univariate_restriction(p, a, x);
      const auto interp = interpolate_restriction(p, a, x);
      for (std::size_t i = 0; i <= k; ++i)
        EXPECT_NEAR(interp[i], exact[i], 1e-8 * (1 + std::abs(exact[i])));
    }
}

TEST(Restriction, FullSymmetricAndZeroPoint) {
  const auto p = make_sk_poly(3, 3);
  const std::vector<double> x{1, 2, 3};
  // prod (t + x_i) = t^3 + 6 t^2 + 11 t + 6
  EXPECT_EQ(univariate_restriction(p, ones(3), x), (std::vector<double>{6, 11, 6, 1}));
  const auto z = univariate_restriction(make_sk_poly(4, 2), ones(4), std::vector<double>(4, 0.0));
  EXPECT_EQ(z, (std::vector<double>{0, 0, 6}));
}

TEST(RealRoots, QuadraticAndMultiple) {
  const auto r = real_roots(std::vector<double>{11, 12, 3});
  const auto want = oracle::quadratic_roots(11, 12, 3);
  EXPECT_NEAR(r.roots[0], want[0], 1e-14);
  EXPECT_NEAR(r.roots[1], want[1], 1e-14);
  // (t-1)^2 (t+2) = t^3 - 3t + 2
  const auto m = real_roots(std::vector<double>{2, -3, 0, 1});
  EXPECT_NEAR(m.roots[0], -2.0, 1e-12);
  EXPECT_NEAR(m.roots[1], 1.0, 1e-7);
  EXPECT_NEAR(m.roots[2], 1.0, 1e-7);
  EXPECT_THROW(real_roots(std::vector<double>{1, 0}), DomainError);
}

TEST(RealRoots, ComplexPairGivesLargeResidual) {
  // t^2 + 1
  EXPECT_GT(real_roots(std::vector<double>{1, 0, 1}).residual, 1e-3);
}

TEST(AEigenvalues, Examples) {
  const auto p = make_sk_poly(3, 2);
  const std::vector<double> x{1, 2, 3};
  const auto ev = a_eigenvalues(p, ones(3), x);
  EXPECT_NEAR(ev.roots[0], 2.0 - 1.0 / std::sqrt(3.0), 1e-13);
  EXPECT_NEAR(ev.roots[1], 2.0 + 1.0 / std::sqrt(3.0), 1e-13);

  const auto pn = make_sk_poly(4, 4);
  const std::vector<double> y{-1.5, 0.25, 2, 7};
  const auto e2 = a_eigenvalues(pn, ones(4), y);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e2.roots[i], y[i], 1e-9);

  const std::vector<double> c(4, 2.5);
  for (double v : a_eigenvalues(make_sk_poly(4, 3), ones(4), c).roots) EXPECT_NEAR(v, 2.5, 1e-6);
}

TEST(AEigenvalues, Errors) {
  const auto p = make_sk_poly(3, 2);
  EXPECT_THROW(a_eigenvalues(make_sk_poly(3, 3), std::vector<double>{-1, -1, -1}, ones(3)), DomainError);
  EXPECT_THROW(a_eigenvalues(p, ones(2), ones(3)), DomainError);

  HyperbolicPolynomial q;  // x^2 + y^2 is not hyperbolic in any direction
  q.tag = "sum-of-squares";
  q.arity = 2;
  q.degree = 2;
  q.direction = {1, 0};
  q.evaluate = [](std::span<const double> v) { return v[0] * v[0] + v[1] * v[1]; };
  EXPECT_THROW(a_eigenvalues(q, q.direction, std::vector<double>{0, 1}), NotHyperbolicError);
}

TEST(GardingCone, SkMatchesGammaK) {
  Rng rng(52);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + t % 8;
    const std::size_t k = 1 + rng.below(n);
    const auto x = gaussian(rng, n, 0.5);
    const auto g = garding_member(make_sk_poly(n, k), x);
    const auto c = gamma_member(x, k);
    if (g.boundary || c.boundary) continue;
    ++checked;
    EXPECT_EQ(g.member, c.member);
  }
  EXPECT_GT(checked, 1900);
}

TEST(GardingCone, DirectionIsMember) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto p = make_product_poly(n, (n + 1) / 2);
    const auto v = garding_member(p, p.direction);
    EXPECT_TRUE(v.member);
  }
}

TEST(GardingCone, ProductMembershipIsAllPSumsPositive) {
  Rng rng(53);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + t % 5;
    const std::size_t pgrade = 1 + rng.below(n);
    const auto p = make_product_poly(n, pgrade);
    const auto x = gaussian(rng, n, 0.7);
    const auto sums = lambda_brackets(x, pgrade);
    const bool want = *std::min_element(sums.begin(), sums.end()) > 0.0;
    const auto v = garding_member(p, x);
    if (!v.boundary) EXPECT_EQ(v.member, want);
  }
}

TEST(GardingCone, DirectionIndependence) {
  Rng rng(54);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 4;
    const std::size_t k = 1 + rng.below(n);
    const auto p = make_sk_poly(n, k);
    const auto b = sample_gamma(n, k, rng);
    const auto x = gaussian(rng, n, 0.5);
    const auto va = garding_member(p, x);
    const auto vb = garding_member(p, b, x);
    if (va.boundary || vb.boundary) continue;
    EXPECT_EQ(va.member, vb.member);
  }
}

TEST(Instances, ProductSpecialCases) {
  Rng rng(55);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto x = gaussian(rng, n);
    EXPECT_LT(oracle::rel_diff(make_product_poly(n, 1)(x), esp(x, n)), 1e-12);
    EXPECT_LT(oracle::rel_diff(make_product_poly(n, n)(x), esp(x, 1)), 1e-12);
    const SymMatrix a = random_symmetric(n, rng);
    const auto p = make_product_poly(n, n - 1);
    const double via_route = p.matrix_route(a);
    EXPECT_LT(oracle::rel_diff(p(eigenvalues(a)), via_route), 1e-8);
    // Generic route: det of the derivation matrix.
    EXPECT_LT(oracle::rel_diff(determinant(derivation_matrix(a, n - 1).matrix.to_dense()), via_route),
              1e-8);
  }
}

TEST(Instances, DetminorOnMatrixSpace) {
  Rng rng(56);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const auto p = make_detminor_poly(n, k);
      EXPECT_EQ(p.arity, n * (n + 1) / 2);
      const SymMatrix a = random_symmetric(n, rng);
      EXPECT_LT(oracle::rel_diff(p(a.packed()), sk_charpoly(a)[k]), 1e-8);
      const auto lam = gaussian(rng, n);
      EXPECT_LT(oracle::rel_diff(p(SymMatrix::diagonal(lam).packed()), esp(lam, k)), 1e-10);
      const auto v = garding_member(p, a.packed());
      const auto w = k_positive(a, k);
      if (!v.boundary && !w.boundary) EXPECT_EQ(v.member, w.member);
      const auto dd = make_diagonal_detminor_poly(n, k);
      EXPECT_LT(oracle::rel_diff(dd(lam), esp(lam, k)), 1e-10);
    }
}

TEST(Instances, Homogeneity) {
  Rng rng(57);
  for (const auto& p : {make_sk_poly(5, 3), make_product_poly(4, 2), make_diagonal_detminor_poly(4, 3)}) {
    const auto x = gaussian(rng, p.arity);
    std::vector<double> cx = x;
    for (double& v : cx) v *= 1.7;
    EXPECT_LT(oracle::rel_diff(p(cx), std::pow(1.7, static_cast<double>(p.degree)) * p(x)), 1e-8);
    EXPECT_GT(p(p.direction), 0.0);
  }
}

TEST(Instances, FactorizationResidual) {
  Rng rng(58);
  for (const auto& p : {make_sk_poly(6, 4), make_product_poly(5, 2), make_product_poly(4, 3)}) {
    const auto x = gaussian(rng, p.arity);
    const auto ev = a_eigenvalues(p, p.direction, x);
    const double pa = p(p.direction);
    for (int i = 0; i < 10; ++i) {
      const double t = rng.uniform(-3, 3);
      std::vector<double> y = x;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += t * p.direction[j];
      double prod = pa, scale = pa;
      for (double l : ev.roots) {
        prod *= t + l;
        scale *= std::abs(t) + std::abs(l);
      }
      EXPECT_LE(std::abs(p(y) - prod), 1e-7 * scale);
    }
  }
}

TEST(Symmetry, BuiltinsPassAndAsymmetricFails) {
  EXPECT_TRUE(sampled_symmetric(make_sk_poly(5, 2), 1));
  EXPECT_TRUE(sampled_symmetric(make_product_poly(5, 2), 1));
  HyperbolicPolynomial q = make_sk_poly(3, 1);
  q.evaluate = [](std::span<const double> v) { return 2 * v[0] + v[1] + v[2]; };
  EXPECT_FALSE(sampled_symmetric(q, 1));
}

TEST(Conjecture, SkInstanceHoldsAndDiagonalIsEquality) {
  Rng rng(59);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + t % 4;
    const std::size_t k = 2 + rng.below(n - 1);
    const auto a = sample_k_positive_one(n, k, Profile::generic, rng);
    const auto r = conjecture_check(make_sk_poly(n, k), a);
    EXPECT_NE(r.status, Status::violated_candidate);
    EXPECT_NE(r.status, Status::inapplicable);
  }
  const auto d = SymMatrix::diagonal(std::vector<double>{1, 2, 3});
  EXPECT_EQ(conjecture_check(make_sk_poly(3, 2), d).status, Status::equality);
  EXPECT_EQ(conjecture_check(make_sk_poly(3, 2), SymMatrix::identity(3) * -1.0).status,
            Status::inapplicable);
}

TEST(Conjecture, ProductMatchesPCor) {
  Rng rng(60);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 4;
    const auto a = sample_k_positive_one(n, n, Profile::generic, rng);
    const auto r = conjecture_check(make_product_poly(n, 2), a);
    const auto pc = pcor_check(a, 2, 6);
    ASSERT_EQ(pc.status, Status::holds);
    EXPECT_EQ(r.status, Status::holds);
    EXPECT_LT(oracle::rel_diff(r.lhs, pc.lhs), 1e-9);
    EXPECT_LT(oracle::rel_diff(r.rhs, pc.rhs), 1e-9);
  }
}

TEST(Conjecture, UnconfirmedPrimaryViolationIsNotACandidate) {
  // Primary evaluator inflates sorted (eigenvalue-like) inputs; the
  // independent route computes the true value and must veto the candidate.
  HyperbolicPolynomial biased = make_sk_poly(4, 3);
  biased.evaluate = [](std::span<const double> x) {
    const double base = esp(x, 3);
    return std::is_sorted(x.rbegin(), x.rend()) ? base * (1 + 1e-7) : base;
  };
  ConjectureOptions opts;
  opts.verify_symmetry = false;
  SymMatrix a = SymMatrix::diagonal(std::vector<double>{1, 2, 3, 4});
  a.set(0, 1, 1e-6);
  const auto r = conjecture_check(biased, a, opts);
  ASSERT_TRUE(r.witness_value("margin_at_1e-09").has_value());
  EXPECT_LT(*r.witness_value("margin_at_1e-09"), -1e-9);
  ASSERT_TRUE(r.witness_value("margin_at_1e-11").has_value());
  EXPECT_NE(r.status, Status::violated_candidate);
}

TEST(Conjecture, ConfirmedWhenBothRoutesAgree) {
  // Both routes share the same bias, so the escalation has to confirm.
  HyperbolicPolynomial p = make_sk_poly(3, 2);
  p.evaluate = [](std::span<const double> x) {
    return std::is_sorted(x.rbegin(), x.rend()) ? esp(x, 2) * 2.0 : esp(x, 2);
  };
  p.matrix_route = [](const SymMatrix& a) { return sk_matrix(a, 2) * 2.0; };
  ConjectureOptions opts;
  opts.verify_symmetry = false;
  const SymMatrix a{{1, 0.1, 0}, {0.1, 2, 0}, {0, 0, 3}};
  const auto r = conjecture_check(p, a, opts);
  EXPECT_EQ(r.status, Status::violated_candidate);
  EXPECT_LT(*r.witness_value("margin_at_1e-11"), -1e-11);
  EXPECT_TRUE(r.witness_value("rhs_second_route").has_value());
}

TEST(Convexity, ProbesReportNoFailures) {
  const auto sk = make_sk_poly(5, 3);
  EXPECT_NE(convexity_probe(sk, sk.direction, 200, 1).status, Status::violated_candidate);
  const auto pk = make_detminor_poly(3, 2);
  EXPECT_NE(convexity_probe(pk, pk.direction, 100, 2).status, Status::violated_candidate);
  const auto pp = make_product_poly(4, 2);
  const auto r = convexity_probe(pp, pp.direction, 200, 3);
  EXPECT_EQ(r.witness_value("failures"), 0.0);
}
