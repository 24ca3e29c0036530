#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kpos/matrix.hpp"
#include "kpos/report.hpp"
#include "kpos/tolerance.hpp"

namespace kpos {

/// Membership query for Gamma_k(n) = {x : S_j(x) > 0 for j = 1..k}.
struct ConeQuery {
  std::size_t n;
  std::size_t k;
  Tolerance tol = default_tolerance;

  ConeQuery(std::size_t n, std::size_t k, Tolerance tol = default_tolerance);
};

struct ConeVerdict {
  bool member = false;
  /// min over the tested levels of the normalized positivity margins.
  double margin = 0;
  /// First level whose normalized margin is <= tol.rel; set iff !member.
  std::optional<std::size_t> first_failing_j;
  /// |margin| <= tol.rel: too close to the cone boundary to classify.
  bool boundary = false;
};

/// S_j(x) / (1 + ||x||_inf)^j for j = 1..k.
std::vector<double> cone_margins(std::span<const double> x, std::size_t k);

ConeVerdict gamma_member(std::span<const double> x, const ConeQuery& q);
ConeVerdict gamma_member(std::span<const double> x, std::size_t k,
                         const Tolerance& tol = default_tolerance);

/// lambda(A) in Gamma_k(n).
ConeVerdict k_positive(const SymMatrix& a, const ConeQuery& q);
ConeVerdict k_positive(const SymMatrix& a, std::size_t k, const Tolerance& tol = default_tolerance);

/// Same verdict computed from minor sums E_1..E_k instead of eigenvalues.
ConeVerdict k_positive_by_minors(const SymMatrix& a, std::size_t k,
                                 const Tolerance& tol = default_tolerance);

/// Largest k in [0, n] with A k-positive.
std::size_t max_level(const SymMatrix& a, const Tolerance& tol = default_tolerance);

/// For k-positive A with k >= 2, checks that every A[{i}^c] is
/// (k-1)-positive. lhs is the smallest normalized margin found over all i
/// and levels, rhs = 0.
InequalityReport inheritance_check(const SymMatrix& a, std::size_t k,
                                   const Tolerance& tol = default_tolerance);

}  // namespace kpos
