#include "kpos/symfunc.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "kpos/combinatorics.hpp"

namespace kpos {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) throw DomainError("binomial: overflow");
    r = r * num / i;
  }
  return r;
}

SymFunctionTable esp_table(std::span<const double> x) {
  SymFunctionTable t;
  t.s.assign(x.size() + 1, 0.0);
  t.s[0] = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) t.s[j] += x[i] * t.s[j - 1];
  return t;
}

double esp(std::span<const double> x, std::size_t k) {
  if (k > x.size()) return 0.0;
  return esp_table(x)[k];
}

double esp_newton(std::span<const double> x, std::size_t k) {
  const std::size_t n = x.size();
  if (k > n) throw DomainError("esp_newton: order exceeds dimension");
  std::vector<double> p(k + 1, 0.0);
  for (double v : x) {
    double pw = 1.0;
    for (std::size_t m = 1; m <= k; ++m) {
      pw *= v;
      p[m] += pw;
    }
  }
  std::vector<double> e(k + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t m = 1; m <= k; ++m) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= m; ++i) acc += ((i % 2) ? 1.0 : -1.0) * e[m - i] * p[i];
    e[m] = acc / static_cast<double>(m);
  }
  return e[k];
}

double determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Matrix a = m;
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (a(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) / a(c, c);
      if (f == 0.0) continue;
      for (std::size_t j = c + 1; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

double minor_sum(const Matrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw DomainError("minor_sum: matrix is not square");
  if (k > a.rows()) throw DomainError("minor_sum: order exceeds dimension");
  if (k == 0) return 1.0;
  double total = 0.0;
  for_each_combination(a.rows(), k, [&](std::span<const std::size_t> idx) {
    total += determinant(principal_submatrix(a, idx));
  });
  return total;
}

double minor_sum(const SymMatrix& a, std::size_t k) { return minor_sum(a.to_dense(), k); }

double sk_matrix(const SymMatrix& a, std::size_t k) {
  if (k > a.n()) throw DomainError("sk_matrix: order exceeds dimension");
  return esp(eigenvalues(a), k);
}

SymFunctionTable sk_table(const SymMatrix& a) { return esp_table(eigenvalues(a)); }

SymFunctionTable sk_charpoly(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("sk_charpoly: matrix is not square");
  const std::size_t n = a.rows();
  SymFunctionTable t;
  t.s.assign(n + 1, 0.0);
  t.s[0] = 1.0;
  // B_0 = I; C_k = A B_{k-1}; e_k = tr(C_k)/k; B_k = e_k I - C_k.
  Matrix b = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix c = a * b;
    const double ek = c.trace() / static_cast<double>(k);
    t.s[k] = ek;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = (i == j ? ek : 0.0) - c(i, j);
    b = std::move(c);
  }
  return t;
}

SymFunctionTable sk_charpoly(const SymMatrix& a) { return sk_charpoly(a.to_dense()); }

namespace {

// (r,c) cofactor of the k x k matrix m.
double cofactor(const Matrix& m, std::size_t r, std::size_t c) {
  const std::size_t k = m.rows();
  Matrix minor(k - 1, k - 1);
  for (std::size_t i = 0, mi = 0; i < k; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, mj = 0; j < k; ++j) {
      if (j == c) continue;
      minor(mi, mj++) = m(i, j);
    }
    ++mi;
  }
  const double sign = ((r + c) % 2) ? -1.0 : 1.0;
  return sign * determinant(minor);
}

void check_order(const Matrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw DomainError("sk_partial: matrix is not square");
  if (k < 1 || k > a.rows()) throw DomainError("sk_partial: order must be in 1..n");
}

}  // namespace

double sk_partial(const Matrix& a, std::size_t k, std::size_t i, std::size_t j) {
  check_order(a, k);
  if (i >= a.rows() || j >= a.rows()) throw DomainError("sk_partial: index out of range");
  double total = 0.0;
  for_each_combination(a.rows(), k, [&](std::span<const std::size_t> idx) {
    std::size_t ri = k, cj = k;
    for (std::size_t r = 0; r < k; ++r) {
      if (idx[r] == i) ri = r;
      if (idx[r] == j) cj = r;
    }
    if (ri == k || cj == k) return;
    total += cofactor(principal_submatrix(a, idx), ri, cj);
  });
  return total;
}

double sk_partial(const SymMatrix& a, std::size_t k, std::size_t i, std::size_t j) {
  return sk_partial(a.to_dense(), k, i, j);
}

Matrix sk_gradient(const Matrix& a, std::size_t k) {
  check_order(a, k);
  Matrix g(a.rows(), a.rows());
  for_each_combination(a.rows(), k, [&](std::span<const std::size_t> idx) {
    const Matrix sub = principal_submatrix(a, idx);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) g(idx[r], idx[c]) += cofactor(sub, r, c);
  });
  return g;
}

Matrix sk_gradient(const SymMatrix& a, std::size_t k) { return sk_gradient(a.to_dense(), k); }

double diag_esp(const SymMatrix& a, std::size_t k) {
  if (k > a.n()) throw DomainError("diag_esp: order exceeds dimension");
  return esp(a.diagonal_entries(), k);
}

}  // namespace kpos
