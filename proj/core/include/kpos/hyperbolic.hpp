#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpos/cones.hpp"
#include "kpos/error.hpp"
#include "kpos/matrix.hpp"
#include "kpos/report.hpp"
#include "kpos/tolerance.hpp"

namespace kpos {

/// Raised when t -> P(t a + x) shows a non-real root pair.
class NotHyperbolicError : public NumericError {
 public:
  using NumericError::NumericError;
};

using PointFn = std::function<double(std::span<const double>)>;
/// Coefficients c_0..c_k (ascending in t) of t -> P(t a + x), or nullopt if
/// the instance has no closed form for this direction.
using RestrictionFn =
    std::function<std::optional<std::vector<double>>(std::span<const double>, std::span<const double>)>;
/// a-eigenvalues of x in closed form, or nullopt.
using EigenFormFn = RestrictionFn;
/// P(lambda(A)) for A of dimension `arity`, computed without eigenvalues.
using MatrixRouteFn = std::function<double(const SymMatrix&)>;

/// Homogeneous polynomial of degree `degree` on R^arity, hyperbolic in
/// `direction` (P(direction) > 0).
struct HyperbolicPolynomial {
  std::string tag;
  std::size_t arity = 0;
  std::size_t degree = 0;
  std::vector<double> direction;
  PointFn evaluate;
  RestrictionFn restriction;
  EigenFormFn eigen_form;
  MatrixRouteFn matrix_route;

  double operator()(std::span<const double> x) const { return evaluate(x); }
};

/// Normalized residual above which a root is not accepted as real.
inline constexpr double kHyperbolicResidual = 1e-7;

/// Coefficients of t -> P(t a + x). Uses the instance's closed form when it
/// has one, otherwise interpolate_restriction.
std::vector<double> univariate_restriction(const HyperbolicPolynomial& P, std::span<const double> a,
                                           std::span<const double> x);

/// Interpolation at t = 0, 1, -1, 2, -2, ... followed by a Vandermonde solve.
/// An extra node is used as a consistency check; NumericError if it fails.
std::vector<double> interpolate_restriction(const HyperbolicPolynomial& P,
                                            std::span<const double> a, std::span<const double> x);

/// sum_i C(n-i, k-i) t^{k-i} S_i(x), the S_k restriction along (1,..,1).
std::vector<double> sk_restriction_ones(std::span<const double> x, std::size_t k);

/// Horner evaluation of ascending coefficients.
double poly_eval(std::span<const double> c, double t);

struct RealRoots {
  std::vector<double> roots;  // ascending
  double residual = 0;        // max_i |q(r_i)| / sum_j |c_j| |r_i|^j
};

/// Roots of a polynomial assumed to have only real roots. Roots of q' bracket
/// the roots of q (Rolle), so the derivative chain is solved from the linear
/// end upward with bisection inside each bracket. A non-real pair shows up as
/// a large residual.
RealRoots real_roots(std::span<const double> coeffs);

struct AEigenvalues {
  std::vector<double> roots;  // lambda_i(P; a, x), ascending
  double residual = 0;
};

/// lambda_i(P; a, x) with P(t a + x) = P(a) prod_i (t + lambda_i). Throws
/// DomainError if P(a) <= 0 and NotHyperbolicError if the residual exceeds
/// kHyperbolicResidual.
AEigenvalues a_eigenvalues(const HyperbolicPolynomial& P, std::span<const double> a,
                           std::span<const double> x);

/// x in Gamma_a(P): margin = min_i lambda_i / (1 + max_i |lambda_i|).
ConeVerdict garding_member(const HyperbolicPolynomial& P, std::span<const double> a,
                           std::span<const double> x, const Tolerance& tol = default_tolerance);
ConeVerdict garding_member(const HyperbolicPolynomial& P, std::span<const double> x,
                           const Tolerance& tol = default_tolerance);

/// S_k on R^n, direction (1,..,1).
HyperbolicPolynomial make_sk_poly(std::size_t n, std::size_t k);

/// P_k on symmetric n x n matrices viewed as points of R^N, N = n(n+1)/2, in
/// SymMatrix packed order; P_k(A) is the t^{n-k} coefficient of det(tI + A).
/// Direction: the identity.
HyperbolicPolynomial make_detminor_poly(std::size_t n, std::size_t k);

/// Coordinate restriction of P_k to diagonal matrices, x -> P_k(diag(x)),
/// evaluated through the characteristic polynomial. A symmetric polynomial
/// on R^n usable by conjecture_check.
HyperbolicPolynomial make_diagonal_detminor_poly(std::size_t n, std::size_t k);

/// prod over p-subsets I of sum_{i in I} x_i, direction (1,..,1).
HyperbolicPolynomial make_product_poly(std::size_t n, std::size_t p);

/// Packed identity of dimension n (the P_k direction).
std::vector<double> packed_identity(std::size_t n);

/// Sampled check that P is invariant under coordinate permutations:
/// `perms` random permutations at each of `points` random points.
bool sampled_symmetric(const HyperbolicPolynomial& P, std::uint64_t seed, int perms = 20,
                       int points = 20, double rel_tol = 1e-9);

struct ConjectureOptions {
  bool verify_symmetry = true;
  std::uint64_t symmetry_seed = 0x5EED;
  /// Escalation levels: a candidate needs margin < -eps on the primary
  /// route at `primary_eps` and on the independent route at `tight_eps`.
  double primary_eps = 1e-9;
  double tight_eps = 1e-11;
};

/// For lambda(A) in Gamma(P): (a_11..a_nn) in Gamma(P) and
/// P(a_11..a_nn) >= P(lambda(A)). `violated-candidate` is only returned
/// after confirmation at both escalation levels; an unconfirmed primary
/// violation is reported as `holds`/`equality` of the independent route with
/// a note. Witness keys: margin_at_1e-09, margin_at_1e-11, rhs_second_route.
InequalityReport conjecture_check(const HyperbolicPolynomial& P, const SymMatrix& a,
                                  const ConjectureOptions& opts = {});

/// Random pairs inside Gamma_a(P) (rejection from a + Gaussian), random
/// convex combinations tested for membership. lhs is the smallest
/// combination margin seen; status violated-candidate iff some combination
/// lies outside the cone beyond the boundary band.
InequalityReport convexity_probe(const HyperbolicPolynomial& P, std::span<const double> a,
                                 std::size_t trials, std::uint64_t seed,
                                 const Tolerance& tol = default_tolerance);

}  // namespace kpos
