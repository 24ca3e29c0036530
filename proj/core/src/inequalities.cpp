#include "kpos/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kpos/cones.hpp"
#include "kpos/symfunc.hpp"

namespace kpos {

namespace {

double max_abs3(double a, double b, double c = 0.0, double d = 0.0) {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

void set_margin(InequalityReport& r, double margin) {
  r.margin = margin;
  r.status = classify(margin, r.tolerance_level);
}

void note_equality_diagnosis(InequalityReport& r, const SymMatrix& a) {
  const double off = a.off_diagonal_max();
  r.with("offdiag_max", off);
  const bool looks_diagonal = off <= kEqualityOffDiagonal * (1.0 + a.max_abs());
  if (r.status == Status::equality && !looks_diagonal)
    r.note = "equality reported on a non-diagonal input";
  else if (r.status == Status::holds && a.is_diagonal())
    r.note = "strict inequality reported on a diagonal input";
}

// k-th power mean form k * x^{(k-1)/k} * y^{1/k} on verified-positive x, y.
double garding_rhs(double x, double y, std::size_t k) {
  const double kk = static_cast<double>(k);
  return kk * std::exp(((kk - 1.0) / kk) * std::log(x) + std::log(y) / kk);
}

constexpr std::size_t kMinorRouteMaxN = 16;

}  // namespace

InequalityReport remark_check(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "diagonal_identity";
  if (k != 1 && k != 2) return make_inapplicable(tag, n, k, "defined for k = 1, 2 only");
  if (k > n) return make_inapplicable(tag, n, k, "k exceeds n");
  const auto diag = a.diagonal_entries();

  if (k == 1) {
    double abs_sum = 0.0;
    for (double v : diag) abs_sum += std::abs(v);
    const double lhs = diag_esp(a, 1);
    const double rhs = sk_matrix(a, 1);
    InequalityReport r =
        make_identity_report(tag, n, k, lhs, rhs, std::max({abs_sum, a.max_abs(), tol.abs}), tol.rel);
    return r;
  }

  double off_sq = 0.0;
  double diag_terms = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      off_sq += a(i, j) * a(i, j);
      diag_terms += std::abs(diag[i] * diag[j]);
    }
  const double lhs = diag_esp(a, 2);
  const double rhs = sk_matrix(a, 2);
  InequalityReport r = make_report(tag, n, k, lhs, rhs, max_abs3(lhs, rhs, off_sq), tol);
  r.with("offdiag_sq_sum", off_sq)
      .with("identity_residual", std::abs((lhs - rhs) - off_sq) / std::max(diag_terms + off_sq, tol.abs));
  note_equality_diagnosis(r, a);
  return r;
}

InequalityReport hadamard_check(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "hadamard_type";
  if (k == 1 || k == 2) return remark_check(a, k, tol);
  if (k == 0 || k > n) return make_inapplicable(tag, n, k, "requires 1 <= k <= n");
  const auto cone = k_positive(a, k, tol);
  if (!cone.member) return make_inapplicable(tag, n, k, "input is not k-positive");

  const double lhs = diag_esp(a, k);
  const double rhs = sk_matrix(a, k);
  InequalityReport r = make_report(tag, n, k, lhs, rhs, max_abs3(lhs, rhs), tol);
  r.with("input_cone_margin", cone.margin);
  if (r.status == Status::violated_candidate && n <= kMinorRouteMaxN) {
    const double rhs2 = minor_sum(a, k);
    const double m2 = (lhs - rhs2) / std::max(max_abs3(lhs, rhs2), tol.abs);
    r.with("margin_minor_route", m2);
    if (m2 >= -tol.rel) {
      r.rhs = rhs2;
      set_margin(r, m2);
      r.note = "eigenvalue route disagreed with the minor-sum route; minor-sum route kept";
    }
  }
  note_equality_diagnosis(r, a);
  if (k == n) r.note += r.note.empty() ? "classical Hadamard determinant inequality"
                                       : "; classical Hadamard determinant inequality";
  return r;
}

InequalityReport cor1_from_vectors(std::string statement, std::span<const double> diagonal,
                                   std::span<const double> spectrum, std::size_t k,
                                   const Tolerance& tol) {
  const std::size_t n = diagonal.size();
  if (spectrum.size() != n) throw DomainError("cor1_from_vectors: length mismatch");
  if (k < 1 || k > n) return make_inapplicable(std::move(statement), n, k, "requires 1 <= k <= n");
  const auto cone = gamma_member(spectrum, k, tol);
  if (!cone.member) return make_inapplicable(std::move(statement), n, k, "spectrum is not in the cone");

  const auto diag_cone = gamma_member(diagonal, k, tol);
  const double lhs = esp(diagonal, k);
  const double rhs = esp(spectrum, k);
  InequalityReport r = make_report(std::move(statement), n, k, lhs, rhs, max_abs3(lhs, rhs), tol);
  r.with("diag_cone_margin", diag_cone.margin).with("input_cone_margin", cone.margin);
  if (!diag_cone.member && !diag_cone.boundary) {
    r.status = Status::violated_candidate;
    r.note = "diagonal vector outside the cone at level " +
             std::to_string(diag_cone.first_failing_j.value_or(0));
  }
  return r;
}

InequalityReport cor1_check(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  const std::size_t n = a.n();
  if (k < 1 || k > n) return make_inapplicable("diagonal_cone", n, k, "requires 1 <= k <= n");
  InequalityReport r =
      cor1_from_vectors("diagonal_cone", a.diagonal_entries(), eigenvalues(a), k, tol);
  if (r.status != Status::inapplicable && r.note.empty()) note_equality_diagnosis(r, a);
  return r;
}

InequalityReport expand_lemma_check(const SymMatrix& a, std::size_t k, const Tolerance& tol,
                                    std::optional<std::size_t> jopt) {
  const std::size_t n = a.n();
  const char* tag = "bordered_expansion";
  const std::size_t j = jopt.value_or(n - 1);
  if (j >= n) throw DomainError("expand_lemma_check: index out of range");
  if (k < 2 || k > n) return make_inapplicable(tag, n, k, "requires 2 <= k <= n");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (r != j && c != j && std::abs(a(r, c)) > tol.abs)
        return make_inapplicable(tag, n, k, "A[{j}^c] is not diagonal");

  const auto diag = a.diagonal_entries();
  const double lhs = n <= kMinorRouteMaxN ? minor_sum(a, k) : sk_matrix(a, k);
  const double sk_diag = esp(diag, k);
  double correction = 0.0;
  double magnitude = std::abs(sk_diag) + std::abs(lhs);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == j) continue;
    std::vector<double> rest;
    for (std::size_t l = 0; l < n; ++l)
      if (l != i && l != j) rest.push_back(diag[l]);
    const double term = a(i, j) * a(i, j) * esp(rest, k - 2);
    correction += term;
    magnitude += std::abs(term);
  }
  const double rhs = sk_diag - correction;
  return make_identity_report(tag, n, k, lhs, rhs, magnitude, tol.rel);
}

InequalityReport key_lemma_check(const SymMatrix& a, std::size_t j, std::size_t k,
                                 const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "deletion_bound";
  if (j >= n) throw DomainError("key_lemma_check: index out of range");
  if (!(n > k && k >= 2)) return make_inapplicable(tag, n, k, "requires n > k >= 2");
  const SymMatrix sub = delete_index(a, j);
  const auto sub_eigs = eigenvalues(sub);
  const auto sub_cone = gamma_member(sub_eigs, k - 1, tol);
  if (!sub_cone.member) return make_inapplicable(tag, n, k, "A[{j}^c] is not (k-1)-positive");

  const auto t = esp_table(sub_eigs);
  const double bound = t[k] + a(j, j) * t[k - 1];
  const double value = sk_matrix(a, k);
  const double scale = max_abs3(bound, value, t[k], a(j, j) * t[k - 1]);
  InequalityReport r = make_report(tag, n, k, bound, value, scale, tol);

  double border = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) border = std::max(border, std::abs(a(i, j)));
  const double zeroed = sk_matrix(zero_border(a, j), k);
  r.with("deleted_index", static_cast<double>(j + 1))
      .with("border_max", border)
      .with("zeroed_value", zeroed)
      .with("zeroed_residual", std::abs(zeroed - bound) / std::max(scale, tol.abs));
  if (r.status == Status::equality && border > kEqualityOffDiagonal * (1.0 + a.max_abs()))
    r.note = "equality reported with a nonzero border";
  else if (r.status == Status::holds && border == 0.0)
    r.note = "strict inequality reported with a zero border";
  return r;
}

InequalityReport step1_check(const SymMatrix& a, std::size_t level, const Tolerance& tol,
                             std::optional<std::size_t> jopt) {
  const std::size_t n = a.n();
  const char* tag = "border_zeroing";
  const std::size_t j = jopt.value_or(n - 1);
  if (j >= n) throw DomainError("step1_check: index out of range");
  if (!(level >= 2 && level < n)) return make_inapplicable(tag, n, level, "requires 2 <= level < n");
  if (!k_positive(a, level, tol).member)
    return make_inapplicable(tag, n, level, "input is not level-positive");

  const SymMatrix z = zero_border(a, j);
  const auto sz = sk_table(z);
  const auto sa = sk_table(a);
  const auto z_cone = k_positive(z, level, tol);

  InequalityReport r = make_report(tag, n, level, sz[level], sa[level],
                                   max_abs3(sz[level], sa[level]), tol);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t m = 2; m <= level; ++m)
    worst = std::min(worst, (sz[m] - sa[m]) / std::max(max_abs3(sz[m], sa[m]), tol.abs));
  set_margin(r, worst);
  r.with("zeroed_index", static_cast<double>(j + 1))
      .with("zeroed_cone_margin", z_cone.margin)
      .with("s1_residual", std::abs(sz[1] - sa[1]) / (1.0 + std::abs(sa[1])));
  if (!z_cone.member && !z_cone.boundary) {
    r.status = Status::violated_candidate;
    r.note = "zeroed matrix left the cone";
  }
  return r;
}

std::vector<double> zeroing_chain(const SymMatrix& a, std::size_t k) {
  if (k > a.n()) throw DomainError("zeroing_chain: order exceeds dimension");
  std::vector<double> values{sk_matrix(a, k)};
  SymMatrix cur = a;
  for (std::size_t j = a.n(); j-- > 0;) {
    cur = zero_border(cur, j);
    values.push_back(sk_matrix(cur, k));
  }
  return values;
}

InequalityReport zeroing_chain_check(const SymMatrix& a, std::size_t k, const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "zeroing_chain";
  if (k < 1 || k > n) return make_inapplicable(tag, n, k, "requires 1 <= k <= n");
  if (!k_positive(a, k, tol).member) return make_inapplicable(tag, n, k, "input is not k-positive");

  const auto chain = zeroing_chain(a, k);
  double scale = tol.abs;
  for (double v : chain) scale = std::max(scale, std::abs(v));
  double worst_step = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t + 1 < chain.size(); ++t)
    worst_step = std::min(worst_step, (chain[t + 1] - chain[t]) / scale);

  const double target = diag_esp(a, k);
  const double terminal = std::abs(chain.back() - target) / scale;
  InequalityReport r = make_report(tag, n, k, chain.back(), chain.front(), scale, tol);
  r.with("worst_step", worst_step).with("terminal_residual", terminal).with("diag_esp", target);
  if (worst_step < -tol.rel) {
    r.status = Status::violated_candidate;
    r.note = "chain decreased at some step";
  } else if (terminal > tol.rel) {
    r.status = Status::violated_candidate;
    r.note = "chain did not terminate at S_k(diag A)";
  }
  return r;
}

InequalityReport garding_check(const SymMatrix& a, const SymMatrix& d, std::size_t k,
                               const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "garding";
  if (d.n() != n) throw DomainError("garding_check: dimension mismatch");
  if (k < 1 || k > n) return make_inapplicable(tag, n, k, "requires 1 <= k <= n");
  if (!k_positive(a, k, tol).member) return make_inapplicable(tag, n, k, "A is not k-positive");
  if (!k_positive(d, k, tol).member) return make_inapplicable(tag, n, k, "D is not k-positive");

  const Matrix g = sk_gradient(a, k);
  double lhs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lhs += d(i, j) * g(i, j);
  const double sa = sk_matrix(a, k);
  const double sd = sk_matrix(d, k);
  const double rhs = garding_rhs(sa, sd, k);
  InequalityReport r = make_report(tag, n, k, lhs, rhs, max_abs3(lhs, rhs), tol);
  r.with("sk_a", sa).with("sk_d", sd);
  return r;
}

InequalityReport cor2_check(const SymMatrix& a, const SymMatrix& b, std::size_t k,
                            const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "weighted_deletion";
  if (b.n() != n) throw DomainError("cor2_check: dimension mismatch");
  if (k < 2 || k > n) return make_inapplicable(tag, n, k, "requires 2 <= k <= n");
  if (!k_positive(a, k, tol).member) return make_inapplicable(tag, n, k, "A is not k-positive");
  if (!k_positive(b, k, tol).member) return make_inapplicable(tag, n, k, "B is not k-positive");

  double lhs = 0.0;
  double lhs_partial = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lhs += b(i, i) * sk_matrix(delete_index(a, i), k - 1);
    lhs_partial += b(i, i) * sk_partial(a, k, i, i);
  }
  const double sa = sk_matrix(a, k);
  const double sb = sk_matrix(b, k);
  const double rhs = garding_rhs(sa, sb, k);
  InequalityReport r = make_report(tag, n, k, lhs, rhs, max_abs3(lhs, rhs), tol);
  r.with("lhs_partial_route", lhs_partial)
      .with("route_discrepancy",
            std::abs(lhs - lhs_partial) / std::max(max_abs3(lhs, lhs_partial), tol.abs));
  return r;
}

}  // namespace kpos
