#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kpos/matrix.hpp"
#include "kpos/report.hpp"
#include "kpos/tolerance.hpp"

// Verifiers for the Hadamard-type family of statements. Each one re-checks
// its own hypotheses and answers `inapplicable` instead of throwing, so a
// randomized sweep never aborts on a precondition failure.

namespace kpos {

/// Equality diagnosis bound: an equality verdict is consistent with "A is
/// diagonal" when max_{i!=j} |a_ij| <= kEqualityOffDiagonal * (1 + ||A||_max).
inline constexpr double kEqualityOffDiagonal = 1e-6;

/// S_k(diag A) >= S_k(A) for k-positive A, 3 <= k <= n; k = 1, 2 are
/// forwarded to remark_check. A violation on the eigenvalue route is
/// re-evaluated with minor sums before it is reported.
InequalityReport hadamard_check(const SymMatrix& a, std::size_t k,
                                const Tolerance& tol = default_tolerance);

/// k = 1: S_1(A) = S_1(diag A). k = 2: S_2(diag A) - S_2(A) = sum_{i<j} a_ij^2.
/// Holds for every symmetric A.
InequalityReport remark_check(const SymMatrix& a, std::size_t k,
                              const Tolerance& tol = default_tolerance);

/// For k-positive A: diag(A) in Gamma_k(n) and S_k(diag A) >= S_k(A).
InequalityReport cor1_check(const SymMatrix& a, std::size_t k,
                            const Tolerance& tol = default_tolerance);

/// Same statement on raw vectors: `diagonal` plays diag(A), `spectrum`
/// plays lambda(A).
InequalityReport cor1_from_vectors(std::string statement, std::span<const double> diagonal,
                                   std::span<const double> spectrum, std::size_t k,
                                   const Tolerance& tol = default_tolerance);

/// When A[{j}^c] is diagonal:
///   S_k(A) = S_k(diag A) - sum_{i != j} a_ij^2 S_{k-2}(diag A[{i,j}^c]).
/// lhs comes from the minor-sum oracle. j defaults to the last index.
InequalityReport expand_lemma_check(const SymMatrix& a, std::size_t k,
                                    const Tolerance& tol = default_tolerance,
                                    std::optional<std::size_t> j = std::nullopt);

/// If n > k >= 2 and A[{j}^c] is (k-1)-positive:
///   S_k(A) <= S_k(A[{j}^c]) + a_jj S_{k-1}(A[{j}^c]),
/// with equality iff row j is zero off the diagonal. lhs is the bound side.
InequalityReport key_lemma_check(const SymMatrix& a, std::size_t j, std::size_t k,
                                 const Tolerance& tol = default_tolerance);

/// For `level`-positive A with 2 <= level < n: zero_border(A, j) is still
/// level-positive and S_m(zero_border(A, j)) >= S_m(A) for 2 <= m <= level.
/// The report margin is the smallest normalized gain over m.
InequalityReport step1_check(const SymMatrix& a, std::size_t level,
                             const Tolerance& tol = default_tolerance,
                             std::optional<std::size_t> j = std::nullopt);

/// S_k after zeroing rows n-1, n-2, ..., 0 in turn; n+1 values starting at
/// S_k(A).
std::vector<double> zeroing_chain(const SymMatrix& a, std::size_t k);

/// The chain above is nondecreasing for k-positive A and ends at
/// S_k(diag A).
InequalityReport zeroing_chain_check(const SymMatrix& a, std::size_t k,
                                     const Tolerance& tol = default_tolerance);

/// sum_{i,j} d_ij dS_k/da_ij (A) >= k S_k(A)^{(k-1)/k} S_k(D)^{1/k} for
/// k-positive A and D.
InequalityReport garding_check(const SymMatrix& a, const SymMatrix& d, std::size_t k,
                               const Tolerance& tol = default_tolerance);

/// sum_i b_ii S_{k-1}(A[{i}^c]) >= k S_k(A)^{(k-1)/k} S_k(B)^{1/k} for
/// k-positive A and B, k >= 2. The lhs is also computed through the diagonal
/// partials S_k^{ii}(A) and the two routes are compared in the witness.
InequalityReport cor2_check(const SymMatrix& a, const SymMatrix& b, std::size_t k,
                            const Tolerance& tol = default_tolerance);

}  // namespace kpos
