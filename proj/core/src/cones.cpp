#include "kpos/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kpos/eigen.hpp"
#include "kpos/symfunc.hpp"

namespace kpos {

ConeQuery::ConeQuery(std::size_t n_, std::size_t k_, Tolerance tol_) : n(n_), k(k_), tol(tol_) {
  if (k < 1 || k > n) throw DomainError("ConeQuery: level must satisfy 1 <= k <= n");
}

namespace {

double inf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

ConeVerdict verdict_from_values(std::span<const double> s, double scale_base, std::size_t k,
                                const Tolerance& tol) {
  ConeVerdict v;
  v.margin = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    scale *= scale_base;
    const double m = s[j] / scale;
    if (!v.first_failing_j && !(m > tol.rel)) v.first_failing_j = j;
    v.margin = std::min(v.margin, m);
  }
  v.member = !v.first_failing_j.has_value();
  v.boundary = std::abs(v.margin) <= tol.rel;
  return v;
}

}  // namespace

std::vector<double> cone_margins(std::span<const double> x, std::size_t k) {
  const auto t = esp_table(x);
  const double base = 1.0 + inf_norm(x);
  std::vector<double> m(k);
  double scale = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    scale *= base;
    m[j - 1] = t[j] / scale;
  }
  return m;
}

ConeVerdict gamma_member(std::span<const double> x, const ConeQuery& q) {
  if (x.size() != q.n) throw DomainError("gamma_member: vector length does not match n");
  const auto t = esp_table(x);
  return verdict_from_values(t.s, 1.0 + inf_norm(x), q.k, q.tol);
}

ConeVerdict gamma_member(std::span<const double> x, std::size_t k, const Tolerance& tol) {
  return gamma_member(x, ConeQuery(x.size(), k, tol));
}

ConeVerdict k_positive(const SymMatrix& a, const ConeQuery& q) {
  if (a.n() != q.n) throw DomainError("k_positive: matrix dimension does not match n");
  return gamma_member(eigenvalues(a), q);
}

ConeVerdict k_positive(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  return k_positive(a, ConeQuery(a.n(), k, tol));
}

ConeVerdict k_positive_by_minors(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  const ConeQuery q(a.n(), k, tol);
  std::vector<double> s(k + 1, 1.0);
  for (std::size_t j = 1; j <= k; ++j) s[j] = minor_sum(a, j);
  // The margin scale needs ||lambda||_inf, the spectral radius.
  const auto lam = eigenvalues(a);
  return verdict_from_values(s, 1.0 + inf_norm(lam), q.k, q.tol);
}

std::size_t max_level(const SymMatrix& a, const Tolerance& tol) {
  const auto lam = eigenvalues(a);
  const auto m = cone_margins(lam, a.n());
  std::size_t level = 0;
  while (level < m.size() && m[level] > tol.rel) ++level;
  return level;
}

InequalityReport inheritance_check(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "submatrix_inheritance";
  if (k < 2 || k > n) return make_inapplicable(tag, n, k, "requires 2 <= k <= n");
  const auto self = k_positive(a, k, tol);
  if (!self.member) return make_inapplicable(tag, n, k, "input is not k-positive");

  double worst = std::numeric_limits<double>::infinity();
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto sub = k_positive(delete_index(a, i), k - 1, tol);
    if (sub.margin < worst) {
      worst = sub.margin;
      worst_i = i;
    }
  }
  InequalityReport r = make_report(tag, n, k, worst, 0.0, 1.0, tol);
  r.with("weakest_deleted_index", static_cast<double>(worst_i + 1)).with("input_cone_margin", self.margin);
  return r;
}

}  // namespace kpos
