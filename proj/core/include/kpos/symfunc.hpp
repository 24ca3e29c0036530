#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kpos/eigen.hpp"
#include "kpos/matrix.hpp"

namespace kpos {

/// S_0, S_1, ..., S_n of an n-vector; s[0] == 1 exactly.
struct SymFunctionTable {
  std::vector<double> s;

  std::size_t n() const noexcept { return s.size() - 1; }
  double operator[](std::size_t k) const { return k < s.size() ? s[k] : 0.0; }
};

/// Elementary symmetric functions by the coefficient recurrence of
/// prod_i (t + x_i): one multiply-accumulate pass per coordinate.
SymFunctionTable esp_table(std::span<const double> x);

/// S_k(x); 0 for k > n.
double esp(std::span<const double> x, std::size_t k);

/// S_k(x) from power sums via Newton's identities. Independent of esp_table.
double esp_newton(std::span<const double> x, std::size_t k);

/// Determinant by Gaussian elimination with partial pivoting. det of a
/// 0x0 matrix is 1.
double determinant(const Matrix& m);

/// E_k(A): sum of all C(n,k) principal k x k minors. Brute-force oracle,
/// cost C(n,k) k^3; meant for n <= 16.
double minor_sum(const Matrix& a, std::size_t k);
double minor_sum(const SymMatrix& a, std::size_t k);

/// S_k(lambda(A)) through the eigensolver. The public route.
double sk_matrix(const SymMatrix& a, std::size_t k);
SymFunctionTable sk_table(const SymMatrix& a);

/// All S_k(A) from the characteristic polynomial, computed by the
/// Faddeev-LeVerrier trace recursion (no eigenvalues involved).
SymFunctionTable sk_charpoly(const Matrix& a);
SymFunctionTable sk_charpoly(const SymMatrix& a);

/// Exact partial derivative of E_k with respect to entry (i,j), treating the
/// n^2 entries as independent coordinates: each principal minor on an index
/// set containing i and j contributes its (i,j) cofactor.
double sk_partial(const Matrix& a, std::size_t k, std::size_t i, std::size_t j);
double sk_partial(const SymMatrix& a, std::size_t k, std::size_t i, std::size_t j);

/// Matrix of all partials dE_k/da_ij at once.
Matrix sk_gradient(const Matrix& a, std::size_t k);
Matrix sk_gradient(const SymMatrix& a, std::size_t k);

/// S_k of the diagonal entries.
double diag_esp(const SymMatrix& a, std::size_t k);

}  // namespace kpos
