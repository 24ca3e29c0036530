#include "kpos/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kpos/cones.hpp"
#include "kpos/error.hpp"
#include "kpos/matrix_io.hpp"
#include "kpos/report.hpp"

namespace kpos {

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::generic: return "generic";
    case Profile::strict: return "strict";
    case Profile::near_boundary: return "near-boundary";
    case Profile::near_diagonal: return "near-diagonal";
  }
  return "generic";
}

Profile profile_from_string(std::string_view s) {
  if (s == "generic") return Profile::generic;
  if (s == "strict" || s == "strictly-k-not-k+1") return Profile::strict;
  if (s == "near-boundary") return Profile::near_boundary;
  if (s == "near-diagonal") return Profile::near_diagonal;
  throw DomainError("unknown sampling profile '" + std::string(s) + "'");
}

void SampleSpec::validate() const {
  if (count < 1) throw DomainError("SampleSpec: count must be at least 1");
  if (k < 1 || k > n) throw DomainError("SampleSpec: requires 1 <= k <= n");
  if (profile == Profile::strict && k >= n)
    throw DomainError("SampleSpec: the strict profile requires k < n");
}

OrthogonalMatrix haar_orthogonal(std::size_t n, Rng& rng) {
  if (n < 1) throw DomainError("haar_orthogonal: n must be at least 1");
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = rng.normal();
  for (std::size_t c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t b = 0; b < c; ++b) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, b) * q(i, c);
        for (std::size_t i = 0; i < n; ++i) q(i, c) -= dot * q(i, b);
      }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += q(i, c) * q(i, c);
    norm = std::sqrt(norm);
    if (!(norm > 1e-300)) throw SamplingError("haar_orthogonal: degenerate Gaussian draw");
    for (std::size_t i = 0; i < n; ++i) q(i, c) /= norm;
  }
  return OrthogonalMatrix(std::move(q));
}

OrthogonalMatrix haar_orthogonal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_orthogonal(n, rng);
}

SymMatrix random_symmetric(std::size_t n, Rng& rng, double lo, double hi) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a.set(i, j, rng.uniform(lo, hi));
  return a;
}

namespace {

std::vector<double> shifted(std::span<const double> mu, double t) {
  std::vector<double> x(mu.begin(), mu.end());
  for (double& v : x) v += t;
  return x;
}

double inf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

constexpr int kBisectionSteps = 200;

}  // namespace

ShiftThresholds find_shift_threshold(std::size_t n, Rng& rng, const ConeMarginFn& margin,
                                     double required) {
  ShiftThresholds out;
  out.base.resize(n);
  for (double& v : out.base) v = rng.normal();
  const double spread = 1.0 + inf_norm(out.base);

  // Every coordinate negative: outside any cone in the upper half-space of S_1.
  double lo = -spread;
  double hi = spread;
  int doublings = 0;
  while (!(margin(shifted(out.base, hi)) > required)) {
    hi = 2.0 * hi + 1.0;
    if (++doublings > 200) throw SamplingError("find_shift_threshold: no admissible shift found");
  }
  for (int it = 0; it < kBisectionSteps && hi - lo > 1e-15 * spread; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (margin(shifted(out.base, mid)) > required) hi = mid;
    else lo = mid;
  }
  out.threshold = hi;
  return out;
}

std::vector<double> sample_cone_point(std::size_t n, Rng& rng, const ConeMarginFn& margin,
                                      const Tolerance& tol) {
  const double required = kSampleMarginFactor * tol.rel;
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const auto th = find_shift_threshold(n, rng, margin, required);
    const double spread = 1.0 + inf_norm(th.base);
    auto x = shifted(th.base, th.threshold + rng.uniform() * spread);
    if (margin(x) > required) return x;
  }
  throw SamplingError("sample_cone_point: rejection budget exhausted");
}

std::vector<double> sample_gamma(std::size_t n, std::size_t k, Rng& rng, Profile profile,
                                 const Tolerance& tol) {
  if (k < 1 || k > n) throw DomainError("sample_gamma: requires 1 <= k <= n");
  if (profile == Profile::strict && k >= n)
    throw DomainError("sample_gamma: the strict profile requires k < n");
  const double required = kSampleMarginFactor * tol.rel;
  const auto margin_at = [](std::size_t level) {
    return [level](std::span<const double> x) { return gamma_member(x, level).margin; };
  };

  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const auto th = find_shift_threshold(n, rng, margin_at(k), required);
    const double spread = 1.0 + inf_norm(th.base);
    double t = th.threshold;
    switch (profile) {
      case Profile::generic:
      case Profile::near_diagonal:
        t += rng.uniform() * spread;
        break;
      case Profile::near_boundary:
        t += std::pow(10.0, rng.uniform(-6.0, -2.0)) * spread;
        break;
      case Profile::strict: {
        // Threshold for level k+1 over the same base point.
        double lo = th.threshold;
        double hi = th.threshold + spread;
        const auto next = margin_at(k + 1);
        int doublings = 0;
        while (!(next(shifted(th.base, hi)) > required) && doublings++ < 200) hi += 2.0 * (hi - lo);
        for (int it = 0; it < kBisectionSteps && hi - lo > 1e-15 * spread; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (next(shifted(th.base, mid)) > required) hi = mid;
          else lo = mid;
        }
        t = th.threshold + rng.uniform() * (hi - th.threshold);
        break;
      }
    }
    auto x = shifted(th.base, t);
    const auto m = cone_margins(x, profile == Profile::strict ? k + 1 : k);
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) ok = ok && m[j] > required;
    if (profile == Profile::strict) ok = ok && m[k] < -required;
    if (ok) return x;
  }
  throw SamplingError("sample_gamma: rejection budget exhausted");
}

std::vector<double> sample_gamma(std::size_t n, std::size_t k, std::uint64_t seed, Profile profile,
                                 const Tolerance& tol) {
  Rng rng(seed);
  return sample_gamma(n, k, rng, profile, tol);
}

SymMatrix sample_k_positive_one(std::size_t n, std::size_t k, Profile profile, Rng& rng,
                                const Tolerance& tol) {
  SampleSpec{n, k, 1, 0, profile}.validate();
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const auto lambda = sample_gamma(n, k, rng, profile, tol);
    SymMatrix a(n);
    if (profile == Profile::near_diagonal) {
      const double amp = kNearDiagonalNoise * inf_norm(lambda);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          a.set(i, j, (i == j ? lambda[i] : 0.0) + rng.uniform(-1.0, 1.0) * amp);
    } else {
      a = conjugate(SymMatrix::diagonal(lambda), haar_orthogonal(n, rng));
    }
    const auto v = k_positive(a, k, tol);
    if (!v.member || v.boundary) continue;
    if (profile == Profile::strict && max_level(a, tol) != k) continue;
    return a;
  }
  throw SamplingError("sample_k_positive: rejection budget exhausted");
}

std::vector<SymMatrix> sample_k_positive(const SampleSpec& spec, const Tolerance& tol) {
  spec.validate();
  std::vector<SymMatrix> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    Rng rng = Rng::for_trial(spec.master_seed, i);
    out.push_back(sample_k_positive_one(spec.n, spec.k, spec.profile, rng, tol));
  }
  return out;
}

nlohmann::json sample_to_json(const SymMatrix& a, const SampleSpec& spec, std::uint64_t trial) {
  nlohmann::json j = matrix_to_json(a);
  j["format_version"] = kFormatVersion;
  j["k"] = spec.k;
  j["profile"] = std::string(to_string(spec.profile));
  j["seed"] = spec.master_seed;
  j["trial"] = trial;
  return j;
}

}  // namespace kpos
