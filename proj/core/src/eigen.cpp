#include "kpos/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kpos {

namespace {

double off_diagonal_frobenius(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) s += 2.0 * m(i, j) * m(i, j);
  return std::sqrt(s);
}

double frobenius(const Matrix& m) {
  double s = 0.0;
  for (double v : m.data()) s += v * v;
  return std::sqrt(s);
}

// One Jacobi rotation annihilating m(p,q); accumulates into v.
void rotate(Matrix& m, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = m(p, q);
  if (apq == 0.0) return;
  const double tau = (m(q, q) - m(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = m.rows();

  m(p, p) -= t * apq;
  m(q, q) += t * apq;
  m(p, q) = m(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = m(r, p);
    const double arq = m(r, q);
    m(r, p) = m(p, r) = c * arp - s * arq;
    m(r, q) = m(q, r) = s * arp + c * arq;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

}  // namespace

Matrix EigenDecomposition::reconstruct() const {
  const std::size_t n = values.size();
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < n; ++c) s += vectors(i, c) * values[c] * vectors(j, c);
      r(i, j) = s;
    }
  return r;
}

EigenDecomposition eigen(const SymMatrix& a, const EigenOptions& opts) {
  const std::size_t n = a.n();
  Matrix m = a.to_dense();
  Matrix v = Matrix::identity(n);

  const double target = opts.relative_tolerance * frobenius(m);
  double off = off_diagonal_frobenius(m);
  int sweeps = 0;
  while (off > target) {
    if (sweeps == opts.max_sweeps)
      throw NumericError("eigen: Jacobi iteration did not converge, off-diagonal norm " +
                             std::to_string(off),
                         off);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(m, v, p, q);
    ++sweeps;
    off = off_diagonal_frobenius(m);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return m(x, x) > m(y, y); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = m(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  out.residual = off;
  out.sweeps = sweeps;
  return out;
}

std::vector<double> eigenvalues(const SymMatrix& a, const EigenOptions& opts) {
  return eigen(a, opts).values;
}

}  // namespace kpos
