#include "kpos/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kpos/combinatorics.hpp"
#include "kpos/derivation.hpp"
#include "kpos/eigen.hpp"
#include "kpos/rng.hpp"
#include "kpos/symfunc.hpp"

namespace kpos {

namespace {

std::vector<double> axpy_point(std::span<const double> a, std::span<const double> x, double t) {
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * a[i];
  return y;
}

double interpolation_node(std::size_t j) {
  // 0, 1, -1, 2, -2, ...
  if (j == 0) return 0.0;
  const double m = static_cast<double>((j + 1) / 2);
  return (j % 2) ? m : -m;
}

// Solves V c = y in place by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(Matrix v, std::vector<double> y) {
  const std::size_t n = y.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(v(r, c)) > std::abs(v(piv, c))) piv = r;
    if (v(piv, c) == 0.0) throw NumericError("interpolation: singular Vandermonde system", 0.0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(v(c, j), v(piv, j));
      std::swap(y[c], y[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = v(r, c) / v(c, c);
      for (std::size_t j = c; j < n; ++j) v(r, j) -= f * v(c, j);
      y[r] -= f * y[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = y[r];
    for (std::size_t j = r + 1; j < n; ++j) s -= v(r, j) * x[j];
    x[r] = s / v(r, r);
  }
  return x;
}

double abs_poly_eval(std::span<const double> c, double t) {
  double s = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) s = s * std::abs(t) + std::abs(c[j]);
  return s;
}

std::vector<double> derivative(std::span<const double> c) {
  std::vector<double> d(c.size() > 1 ? c.size() - 1 : 0);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(i + 1) * c[i + 1];
  return d;
}

double cauchy_bound(std::span<const double> c) {
  const double lead = c.back();
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i] / lead));
  return 1.0 + m;
}

// Root of q in [lo, hi] where [lo, hi] lies between consecutive critical
// points; at a critical point that is itself a (multiple) root there is no
// sign change and the endpoint with the smaller |q| is returned.
double bracket_root(std::span<const double> q, double lo, double hi) {
  double flo = poly_eval(q, lo);
  const double fhi = poly_eval(q, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) return std::abs(flo) <= std::abs(fhi) ? lo : hi;
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = poly_eval(q, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> roots_from_critical(std::span<const double> q, std::span<const double> crit) {
  const double bound = cauchy_bound(q);
  std::vector<double> edges;
  edges.reserve(crit.size() + 2);
  edges.push_back(-bound);
  for (double c : crit) edges.push_back(std::clamp(c, -bound, bound));
  edges.push_back(bound);
  std::vector<double> roots;
  roots.reserve(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    roots.push_back(bracket_root(q, edges[i], std::max(edges[i], edges[i + 1])));
  return roots;
}

bool is_ones(std::span<const double> a) {
  return std::all_of(a.begin(), a.end(), [](double v) { return v == 1.0; });
}

}  // namespace

double poly_eval(std::span<const double> c, double t) {
  double s = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) s = s * t + c[j];
  return s;
}

RealRoots real_roots(std::span<const double> coeffs) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  if (c.empty() || c.back() == 0.0) throw DomainError("real_roots: leading coefficient is zero");
  const std::size_t d = c.size() - 1;
  RealRoots out;
  if (d == 0) return out;

  std::vector<std::vector<double>> chain{c};
  for (std::size_t l = 1; l < d; ++l) chain.push_back(derivative(chain.back()));
  // chain[d-1] is linear.
  std::vector<double> roots{-chain[d - 1][0] / chain[d - 1][1]};
  for (std::size_t l = d - 1; l-- > 0;) roots = roots_from_critical(chain[l], roots);

  std::sort(roots.begin(), roots.end());
  for (double r : roots) {
    const double denom = abs_poly_eval(c, r);
    const double res = denom > 0.0 ? std::abs(poly_eval(c, r)) / denom : 0.0;
    out.residual = std::max(out.residual, res);
  }
  out.roots = std::move(roots);
  return out;
}

std::vector<double> sk_restriction_ones(std::span<const double> x, std::size_t k) {
  const std::size_t n = x.size();
  if (k > n) throw DomainError("sk_restriction_ones: k exceeds n");
  const auto s = esp_table(x);
  std::vector<double> c(k + 1, 0.0);
  // coefficient of t^{k-i} is C(n-i, k-i) S_i(x)
  for (std::size_t i = 0; i <= k; ++i) c[k - i] = static_cast<double>(binomial(n - i, k - i)) * s[i];
  return c;
}

std::vector<double> interpolate_restriction(const HyperbolicPolynomial& P,
                                            std::span<const double> a, std::span<const double> x) {
  if (a.size() != P.arity || x.size() != P.arity)
    throw DomainError("univariate_restriction: dimension mismatch");
  const std::size_t m = P.degree + 1;
  Matrix v(m, m);
  std::vector<double> y(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = interpolation_node(j);
    double pw = 1.0;
    for (std::size_t c = 0; c < m; ++c) {
      v(j, c) = pw;
      pw *= t;
    }
    y[j] = P(axpy_point(a, x, t));
  }
  auto coeffs = solve_dense(std::move(v), std::move(y));

  const double t_check = interpolation_node(m) + 0.5;
  const double expect = P(axpy_point(a, x, t_check));
  const double got = poly_eval(coeffs, t_check);
  const double scale = std::max({abs_poly_eval(coeffs, t_check), std::abs(expect), 1e-300});
  const double err = std::abs(expect - got) / scale;
  if (!(err <= 1e-6)) throw NumericError("interpolation: restriction is ill-conditioned", err);
  return coeffs;
}

std::vector<double> univariate_restriction(const HyperbolicPolynomial& P, std::span<const double> a,
                                           std::span<const double> x) {
  if (a.size() != P.arity || x.size() != P.arity)
    throw DomainError("univariate_restriction: dimension mismatch");
  if (P.restriction)
    if (auto c = P.restriction(a, x)) return *c;
  return interpolate_restriction(P, a, x);
}

AEigenvalues a_eigenvalues(const HyperbolicPolynomial& P, std::span<const double> a,
                           std::span<const double> x) {
  if (a.size() != P.arity || x.size() != P.arity) throw DomainError("a_eigenvalues: dimension mismatch");
  if (!(P(a) > 0.0)) throw DomainError("a_eigenvalues: P(a) must be positive");
  AEigenvalues out;
  if (P.eigen_form) {
    if (auto lam = P.eigen_form(a, x)) {
      out.roots = std::move(*lam);
      std::sort(out.roots.begin(), out.roots.end());
      return out;
    }
  }
  const auto coeffs = univariate_restriction(P, a, x);
  auto rr = real_roots(coeffs);
  if (rr.residual > kHyperbolicResidual)
    throw NotHyperbolicError("not hyperbolic in direction a at x: root residual " +
                                 std::to_string(rr.residual),
                             rr.residual);
  out.roots.resize(rr.roots.size());
  for (std::size_t i = 0; i < rr.roots.size(); ++i) out.roots[i] = -rr.roots[i];
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = rr.residual;
  return out;
}

ConeVerdict garding_member(const HyperbolicPolynomial& P, std::span<const double> a,
                           std::span<const double> x, const Tolerance& tol) {
  const auto ev = a_eigenvalues(P, a, x);
  ConeVerdict v;
  if (ev.roots.empty()) {
    v.member = true;
    v.margin = std::numeric_limits<double>::infinity();
    return v;
  }
  double big = 0.0;
  for (double r : ev.roots) big = std::max(big, std::abs(r));
  v.margin = ev.roots.front() / (1.0 + big);
  v.member = v.margin > tol.rel;
  if (!v.member) v.first_failing_j = 1;
  v.boundary = std::abs(v.margin) <= tol.rel;
  return v;
}

ConeVerdict garding_member(const HyperbolicPolynomial& P, std::span<const double> x,
                           const Tolerance& tol) {
  return garding_member(P, P.direction, x, tol);
}

// ---------------------------------------------------------------------------

HyperbolicPolynomial make_sk_poly(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("make_sk_poly: requires 1 <= k <= n");
  HyperbolicPolynomial P;
  P.tag = "sk(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  P.arity = n;
  P.degree = k;
  P.direction.assign(n, 1.0);
  P.evaluate = [k](std::span<const double> x) { return esp(x, k); };
  // S_k over the linear polynomials a_i t + x_i: exact for every direction.
  P.restriction = [n, k](std::span<const double> a,
                         std::span<const double> x) -> std::optional<std::vector<double>> {
    std::vector<std::vector<double>> e(k + 1);
    e[0] = {1.0};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = std::min(i + 1, k); j >= 1; --j) {
        const auto& prev = e[j - 1];
        auto& cur = e[j];
        if (cur.size() < prev.size() + 1) cur.resize(prev.size() + 1, 0.0);
        for (std::size_t d = 0; d < prev.size(); ++d) {
          cur[d] += x[i] * prev[d];
          cur[d + 1] += a[i] * prev[d];
        }
      }
    auto c = e[k];
    c.resize(k + 1, 0.0);
    return c;
  };
  P.matrix_route = [k](const SymMatrix& a) { return minor_sum(a, k); };
  return P;
}

std::vector<double> packed_identity(std::size_t n) {
  const SymMatrix id = SymMatrix::identity(n);
  return std::vector<double>(id.packed().begin(), id.packed().end());
}

HyperbolicPolynomial make_detminor_poly(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("make_detminor_poly: requires 1 <= k <= n");
  HyperbolicPolynomial P;
  P.tag = "detminor(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  P.arity = SymMatrix::packed_size(n);
  P.degree = k;
  P.direction = packed_identity(n);
  P.evaluate = [n, k](std::span<const double> x) {
    return sk_matrix(SymMatrix::from_packed(n, x), k);
  };
  const auto ident = P.direction;
  // Along the identity: P_k(tI + A) = sum_i C(n-i, k-i) t^{k-i} S_i(A).
  P.restriction = [n, k, ident](std::span<const double> a,
                                std::span<const double> x) -> std::optional<std::vector<double>> {
    if (!std::equal(a.begin(), a.end(), ident.begin(), ident.end())) return std::nullopt;
    return sk_restriction_ones(eigenvalues(SymMatrix::from_packed(n, x)), k);
  };
  P.matrix_route = nullptr;  // arity is N, not n
  return P;
}

HyperbolicPolynomial make_diagonal_detminor_poly(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("make_diagonal_detminor_poly: requires 1 <= k <= n");
  HyperbolicPolynomial P;
  P.tag = "detminor-diag(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  P.arity = n;
  P.degree = k;
  P.direction.assign(n, 1.0);
  P.evaluate = [k](std::span<const double> x) { return sk_charpoly(SymMatrix::diagonal(x))[k]; };
  P.restriction = [k](std::span<const double> a,
                      std::span<const double> x) -> std::optional<std::vector<double>> {
    if (!is_ones(a)) return std::nullopt;
    return sk_restriction_ones(x, k);
  };
  P.matrix_route = [k](const SymMatrix& a) { return sk_charpoly(a)[k]; };
  return P;
}

HyperbolicPolynomial make_product_poly(std::size_t n, std::size_t p) {
  if (p < 1 || p > n) throw DomainError("make_product_poly: requires 1 <= p <= n");
  const std::uint64_t deg = binomial(n, p);
  if (deg > kMaxDerivationDimension) throw DomainError("make_product_poly: C(n,p) exceeds cap");
  HyperbolicPolynomial P;
  P.tag = "product(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
  P.arity = n;
  P.degree = static_cast<std::size_t>(deg);
  P.direction.assign(n, 1.0);
  P.evaluate = [p](std::span<const double> x) {
    double prod = 1.0;
    for (double s : lambda_brackets(x, p)) prod *= s;
    return prod;
  };
  P.restriction = [p](std::span<const double> a,
                      std::span<const double> x) -> std::optional<std::vector<double>> {
    const auto as = lambda_brackets(a, p);
    const auto xs = lambda_brackets(x, p);
    std::vector<double> c{1.0};
    for (std::size_t i = 0; i < as.size(); ++i) {
      std::vector<double> next(c.size() + 1, 0.0);
      for (std::size_t d = 0; d < c.size(); ++d) {
        next[d] += xs[i] * c[d];
        next[d + 1] += as[i] * c[d];
      }
      c = std::move(next);
    }
    return c;
  };
  // P(t a + x) = prod_I (a_I t + x_I) = P(a) prod_I (t + x_I / a_I).
  P.eigen_form = [p](std::span<const double> a,
                     std::span<const double> x) -> std::optional<std::vector<double>> {
    const auto as = lambda_brackets(a, p);
    const auto xs = lambda_brackets(x, p);
    std::vector<double> lam(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (as[i] == 0.0) return std::nullopt;
      lam[i] = xs[i] / as[i];
    }
    return lam;
  };
  // P(lambda(A)) = det(D_A); for p = n-1 the eigenvalue sums are S_1(A) - lambda_i.
  P.matrix_route = [n, p](const SymMatrix& a) {
    if (p + 1 == n && n > 1) {
      Matrix m(n, n);
      const double s1 = a.trace();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? s1 : 0.0) - a(i, j);
      return determinant(m);
    }
    return determinant(derivation_matrix(a, p).matrix.to_dense());
  };
  return P;
}

bool sampled_symmetric(const HyperbolicPolynomial& P, std::uint64_t seed, int perms, int points,
                       double rel_tol) {
  Rng rng(seed);
  std::vector<std::size_t> perm(P.arity);
  for (int pt = 0; pt < points; ++pt) {
    std::vector<double> x(P.arity);
    for (double& v : x) v = rng.normal();
    const double base = P(x);
    for (int q = 0; q < perms; ++q) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      std::vector<double> y(P.arity);
      for (std::size_t i = 0; i < P.arity; ++i) y[i] = x[perm[i]];
      const double v = P(y);
      if (std::abs(v - base) > rel_tol * std::max({std::abs(v), std::abs(base), 1e-300}) &&
          std::abs(v - base) > 1e-14)
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

double rel_margin(double lhs, double rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), default_tolerance.abs});
  return (lhs - rhs) / scale;
}

// Membership re-evaluated through coefficient interpolation and root
// finding, bypassing any closed form the instance provides.
std::optional<double> generic_route_margin(const HyperbolicPolynomial& P, std::span<const double> x) {
  if (P.degree > 16) return std::nullopt;
  try {
    const auto coeffs = interpolate_restriction(P, P.direction, x);
    const auto rr = real_roots(coeffs);
    if (rr.roots.empty()) return std::nullopt;
    double big = 0.0;
    for (double r : rr.roots) big = std::max(big, std::abs(r));
    return -rr.roots.back() / (1.0 + big);
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

}  // namespace

InequalityReport conjecture_check(const HyperbolicPolynomial& P, const SymMatrix& a,
                                  const ConjectureOptions& opts) {
  const std::size_t n = a.n();
  const char* tag = "hyperbolic_hadamard";
  if (P.arity != n) return make_inapplicable(tag, n, P.degree, "polynomial arity differs from n");
  if (opts.verify_symmetry && !sampled_symmetric(P, opts.symmetry_seed))
    return make_inapplicable(tag, n, P.degree, "polynomial failed the symmetry sample");

  const Tolerance primary{default_tolerance.abs, opts.primary_eps};
  const Tolerance tight{default_tolerance.abs, opts.tight_eps};
  const auto lam = eigenvalues(a);
  ConeVerdict in_cone;
  try {
    in_cone = garding_member(P, lam, primary);
  } catch (const NumericError& e) {
    return make_inapplicable(tag, n, P.degree, e.what());
  }
  if (!in_cone.member) return make_inapplicable(tag, n, P.degree, "lambda(A) is not in the cone");

  const auto diag = a.diagonal_entries();
  const ConeVerdict diag_cone = garding_member(P, diag, primary);
  const double lhs = P(diag);
  const double rhs = P(lam);
  InequalityReport r = make_report(tag, n, P.degree, lhs, rhs,
                                   std::max(std::abs(lhs), std::abs(rhs)), primary);
  r.note = P.tag;
  r.with("diag_cone_margin", diag_cone.margin).with("input_cone_margin", in_cone.margin);
  r.with("margin_at_1e-09", r.margin);

  const bool ineq_flag = r.margin < -opts.primary_eps;
  const bool cone_flag = !diag_cone.member && diag_cone.margin < -opts.primary_eps;
  if (!ineq_flag && !cone_flag) {
    if (r.status == Status::violated_candidate) r.status = Status::equality;
    return r;
  }

  // Escalation: independent evaluation route at the tight tolerance.
  bool confirmed = false;
  if (ineq_flag && P.matrix_route) {
    const double rhs2 = P.matrix_route(a);
    const double m2 = rel_margin(lhs, rhs2);
    r.with("rhs_second_route", rhs2).with("margin_at_1e-11", m2);
    confirmed = m2 < -opts.tight_eps;
    if (!confirmed) {
      r.rhs = rhs2;
      r.margin = m2;
      r.status = classify(m2, opts.primary_eps) == Status::violated_candidate ? Status::equality
                                                                              : classify(m2, opts.primary_eps);
      r.note += "; primary-route violation not confirmed by the independent route";
    }
  }
  if (cone_flag) {
    const auto m2 = generic_route_margin(P, diag);
    if (m2) r.with("diag_cone_margin_generic_route", *m2);
    const bool cone_confirmed = m2 && *m2 < -tight.rel;
    confirmed = confirmed || cone_confirmed;
    if (cone_confirmed) r.note += "; diagonal outside the cone";
  }
  if (confirmed) {
    r.status = Status::violated_candidate;
  } else if (r.status == Status::violated_candidate) {
    r.status = Status::inapplicable;
    r.note += "; candidate could not be confirmed by an independent route";
  }
  return r;
}

InequalityReport convexity_probe(const HyperbolicPolynomial& P, std::span<const double> a,
                                 std::size_t trials, std::uint64_t seed, const Tolerance& tol) {
  const char* tag = "cone_convexity";
  if (a.size() != P.arity) throw DomainError("convexity_probe: dimension mismatch");
  if (!(P(a) > 0.0)) throw DomainError("convexity_probe: P(a) must be positive");
  Rng rng(seed);
  double spread = 1.0;
  for (double v : a) spread = std::max(spread, std::abs(v));

  std::size_t rejected = 0;
  const auto draw_member = [&]() -> std::vector<double> {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      const double s = rng.uniform(0.0, 2.0) * spread;
      std::vector<double> x(a.begin(), a.end());
      for (double& v : x) v += s * rng.normal();
      const auto ver = garding_member(P, a, x, tol);
      if (ver.member && !ver.boundary) return x;
      ++rejected;
    }
    throw SamplingError("convexity_probe: rejection budget exhausted");
  };

  std::size_t failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = draw_member();
    const auto y = draw_member();
    const double theta = rng.uniform();
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = theta * x[i] + (1.0 - theta) * y[i];
    const auto ver = garding_member(P, a, z, tol);
    worst = std::min(worst, ver.margin);
    if (!ver.member && !ver.boundary) ++failures;
  }
  if (trials == 0) worst = 0.0;
  InequalityReport r = make_report(tag, P.arity, P.degree, worst, 0.0, 1.0, tol);
  r.note = P.tag;
  r.with("trials", static_cast<double>(trials))
      .with("failures", static_cast<double>(failures))
      .with("rejected_draws", static_cast<double>(rejected));
  if (failures > 0) r.status = Status::violated_candidate;
  else if (r.status == Status::violated_candidate) r.status = Status::equality;
  return r;
}

}  // namespace kpos
