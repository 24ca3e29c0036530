#include "kpos/derivation.hpp"

#include <algorithm>
#include <cmath>

#include "kpos/combinatorics.hpp"
#include "kpos/eigen.hpp"
#include "kpos/inequalities.hpp"

namespace kpos {

std::uint64_t lex_rank(std::size_t n, std::span<const std::size_t> tuple) {
  const std::size_t p = tuple.size();
  if (p > n) throw DomainError("lex_rank: tuple longer than n");
  std::uint64_t rank = 0;
  std::size_t prev = 0;  // smallest admissible value for the current slot
  for (std::size_t m = 0; m < p; ++m) {
    const std::size_t v = tuple[m];
    if (v >= n || v < prev) throw DomainError("lex_rank: tuple must be strictly increasing in [0, n)");
    // Tuples whose slot m holds c in [prev, v) precede this one.
    for (std::size_t c = prev; c < v; ++c) rank += binomial(n - 1 - c, p - 1 - m);
    prev = v + 1;
  }
  return rank;
}

std::vector<std::size_t> lex_unrank(std::size_t n, std::size_t p, std::uint64_t rank) {
  if (p > n || rank >= binomial(n, p)) throw DomainError("lex_unrank: rank out of range");
  std::vector<std::size_t> t(p);
  std::size_t c = 0;
  for (std::size_t m = 0; m < p; ++m) {
    while (true) {
      const std::uint64_t block = binomial(n - 1 - c, p - 1 - m);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    t[m] = c++;
  }
  return t;
}

DerivationMatrix derivation_matrix(const SymMatrix& a, std::size_t p) {
  const std::size_t n = a.n();
  if (p < 1 || p > n) throw DomainError("derivation_matrix: grade must satisfy 1 <= p <= n");
  const std::uint64_t dim = binomial(n, p);
  if (dim > kMaxDerivationDimension) throw DomainError("derivation_matrix: C(n,p) exceeds cap");

  SymMatrix d(static_cast<std::size_t>(dim));
  std::vector<std::size_t> other(p);
  for_each_combination(n, p, [&](std::span<const std::size_t> jt) {
    const std::uint64_t jr = lex_rank(n, jt);
    double diag = 0.0;
    for (std::size_t v : jt) diag += a(v, v);
    d.set(jr, jr, diag);
    // Replace slot `pos_j` (index j) by an index i not in J.
    for (std::size_t pos_j = 0; pos_j < p; ++pos_j) {
      const std::size_t j = jt[pos_j];
      for (std::size_t i = 0; i < n; ++i) {
        if (std::binary_search(jt.begin(), jt.end(), i)) continue;
        const double aij = a(i, j);
        if (aij == 0.0) continue;
        std::size_t w = 0;
        for (std::size_t m = 0; m < p; ++m)
          if (m != pos_j) other[w++] = jt[m];
        other[p - 1] = i;
        std::sort(other.begin(), other.end());
        const std::size_t pos_i = static_cast<std::size_t>(
            std::find(other.begin(), other.end(), i) - other.begin());
        const std::uint64_t ir = lex_rank(n, other);
        if (ir < jr) continue;  // the symmetric partner sets it
        const double sign = ((pos_i + pos_j) % 2) ? -1.0 : 1.0;
        d.set(ir, jr, sign * aij);
      }
    }
  });
  return {n, p, std::move(d)};
}

std::vector<double> lambda_brackets(std::span<const double> lambda, std::size_t p) {
  const std::size_t n = lambda.size();
  if (p < 1 || p > n) throw DomainError("lambda_brackets: grade must satisfy 1 <= p <= n");
  std::vector<double> out;
  out.reserve(binomial(n, p));
  for_each_combination(n, p, [&](std::span<const std::size_t> t) {
    double s = 0.0;
    for (std::size_t v : t) s += lambda[v];
    out.push_back(s);
  });
  return out;
}

InequalityReport spectrum_transfer_check(const SymMatrix& a, std::size_t p) {
  const std::size_t n = a.n();
  const char* tag = "spectrum_transfer";
  if (p < 1 || p > n) {
    auto r = make_inapplicable(tag, n, 0, "requires 1 <= p <= n");
    r.p = p;
    return r;
  }
  if (binomial(n, p) > kMaxDerivationDimension) {
    auto r = make_inapplicable(tag, n, 0, "C(n,p) exceeds cap");
    r.p = p;
    return r;
  }
  auto op_spec = eigenvalues(derivation_matrix(a, p).matrix);
  auto sums = lambda_brackets(eigenvalues(a), p);
  std::sort(op_spec.begin(), op_spec.end());
  std::sort(sums.begin(), sums.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i) worst = std::max(worst, std::abs(op_spec[i] - sums[i]));

  const double scale = 1.0 + a.max_abs();
  InequalityReport r = make_identity_report(tag, n, 0, worst, 0.0, scale, kSpectrumTransferTolerance);
  r.p = p;
  r.with("dimension", static_cast<double>(sums.size()));
  return r;
}

InequalityReport pcor_check(const SymMatrix& a, std::size_t p, std::size_t k, const Tolerance& tol) {
  const std::size_t n = a.n();
  const char* tag = "pair_sum_hadamard";
  InequalityReport r;
  if (p < 1 || p > n || binomial(n, p) > kMaxDerivationDimension) {
    r = make_inapplicable(tag, n, k, "requires 1 <= p <= n and C(n,p) within cap");
  } else {
    const auto dm = derivation_matrix(a, p);
    const auto diag = dm.matrix.diagonal_entries();
    const auto sums = lambda_brackets(eigenvalues(a), p);
    r = cor1_from_vectors(tag, diag, sums, k, tol);
  }
  r.p = p;
  return r;
}

}  // namespace kpos
