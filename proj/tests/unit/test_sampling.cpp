#include <gtest/gtest.h>

#include <cmath>

#include "kpos/cones.hpp"
#include "kpos/rng.hpp"
#include "kpos/sampling.hpp"
#include "kpos/symfunc.hpp"

using namespace kpos;

TEST(Rng, FixedStreams) {
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFull);
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(1, 1));
  EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(2, 0));
}

TEST(Rng, UniformAndBelowRanges) {
  Rng r(9);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    ASSERT_LT(r.below(7), 7u);
  }
  EXPECT_NEAR(sum / 20000, 0.5, 0.02);
}

TEST(Rng, NormalMoments) {
  Rng r(10);
  double s = 0, s2 = 0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double v = r.normal();
    s += v;
    s2 += v * v;
  }
  EXPECT_NEAR(s / n, 0.0, 0.02);
  EXPECT_NEAR(s2 / n, 1.0, 0.03);
}

TEST(Haar, ShapesAndDeterminism) {
  const auto one = haar_orthogonal(1, 5);
  EXPECT_EQ(std::abs(one(0, 0)), 1.0);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto q = haar_orthogonal(n, 77);
    EXPECT_LT(OrthogonalMatrix::residual(q.matrix()), 1e-10);
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0;
      for (std::size_t r = 0; r < n; ++r) s += q(r, c) * q(r, c);
      EXPECT_NEAR(s, 1.0, 1e-10);
    }
    EXPECT_EQ(q.matrix(), haar_orthogonal(n, 77).matrix());
  }
}

TEST(Haar, EntryMomentsMatchRotationInvariance) {
  // For Haar O(n) every entry has mean 0 and variance 1/n.
  const std::size_t n = 4;
  double s = 0, s2 = 0, fixed = 0;
  const int trials = 4000;
  Rng rng(78);
  for (int t = 0; t < trials; ++t) {
    const auto q = haar_orthogonal(n, rng);
    fixed += q(0, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        s += q(i, j);
        s2 += q(i, j) * q(i, j);
      }
  }
  EXPECT_NEAR(s / (trials * n * n), 0.0, 0.01);
  EXPECT_NEAR(s2 / (trials * n * n), 1.0 / n, 1e-9);
  EXPECT_NEAR(fixed / trials, 0.0, 0.03);
}

TEST(SampleGamma, MembershipAndProfiles) {
  Rng rng(80);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 7;
    const std::size_t k = 1 + rng.below(n);
    const auto x = sample_gamma(n, k, rng);
    const auto v = gamma_member(x, k);
    EXPECT_TRUE(v.member);
    EXPECT_GT(v.margin, kSampleMarginFactor * default_tolerance.rel);
  }
  for (int t = 0; t < 100; ++t) {
    const auto x = sample_gamma(4, 2, rng, Profile::strict);
    const auto s = esp_table(x);
    EXPECT_GT(s[1], 0.0);
    EXPECT_GT(s[2], 0.0);
    EXPECT_LT(s[3], 0.0);
  }
  for (int t = 0; t < 50; ++t)
    for (double v : sample_gamma(5, 5, rng)) EXPECT_GT(v, 0.0);
  for (int t = 0; t < 100; ++t) {
    const auto x = sample_gamma(6, 3, rng, Profile::near_boundary);
    EXPECT_TRUE(gamma_member(x, 3).member);
  }
  EXPECT_THROW(sample_gamma(3, 3, rng, Profile::strict), DomainError);
  EXPECT_THROW(sample_gamma(3, 0, rng), DomainError);
}

TEST(SampleGamma, NearBoundaryIsCloserThanGeneric) {
  Rng rng(81);
  double gen = 0, nb = 0;
  for (int t = 0; t < 200; ++t) {
    gen += gamma_member(sample_gamma(6, 3, rng, Profile::generic), 3).margin;
    nb += gamma_member(sample_gamma(6, 3, rng, Profile::near_boundary), 3).margin;
  }
  EXPECT_LT(nb, gen);
}

TEST(SampleKPositive, ReverifiedAndDeterministic) {
  SampleSpec spec{5, 3, 50, 1234, Profile::strict};
  const auto ms = sample_k_positive(spec);
  ASSERT_EQ(ms.size(), 50u);
  for (const auto& a : ms) {
    EXPECT_TRUE(k_positive(a, 3).member);
    EXPECT_EQ(max_level(a), 3u);
  }
  EXPECT_EQ(ms, sample_k_positive(spec));
  // Trial i depends only on (seed, i).
  Rng rng = Rng::for_trial(1234, 17);
  EXPECT_EQ(ms[17], sample_k_positive_one(5, 3, Profile::strict, rng));
}

TEST(SampleKPositive, NearDiagonalNoiseLevel) {
  Rng rng(82);
  for (int t = 0; t < 50; ++t) {
    const auto a = sample_k_positive_one(6, 3, Profile::near_diagonal, rng);
    EXPECT_TRUE(k_positive(a, 3).member);
    double dmax = 0;
    for (double v : a.diagonal_entries()) dmax = std::max(dmax, std::abs(v));
    EXPECT_LE(a.off_diagonal_max(), kNearDiagonalNoise * dmax * 1.0000001);
    EXPECT_GT(a.off_diagonal_max(), 0.0);
  }
}

TEST(SampleSpec, Validation) {
  EXPECT_THROW((SampleSpec{4, 2, 0, 1, Profile::generic}.validate()), DomainError);
  EXPECT_THROW((SampleSpec{4, 4, 1, 1, Profile::strict}.validate()), DomainError);
  EXPECT_THROW((SampleSpec{4, 5, 1, 1, Profile::generic}.validate()), DomainError);
  EXPECT_NO_THROW((SampleSpec{4, 3, 1, 1, Profile::strict}.validate()));
  EXPECT_EQ(profile_from_string("strictly-k-not-k+1"), Profile::strict);
  EXPECT_THROW(profile_from_string("bogus"), DomainError);
}

TEST(SampleKPositive, StrictSuccessRate) {
  // n=5, k=3: the strict profile must succeed for > 99% of spec instances.
  int ok = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    try {
      sample_k_positive(SampleSpec{5, 3, 1, s, Profile::strict});
      ++ok;
    } catch (const SamplingError&) {
    }
  }
  EXPECT_GT(ok, 990);
}
