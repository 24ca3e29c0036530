#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kpos/matrix.hpp"
#include "kpos/report.hpp"
#include "kpos/tolerance.hpp"

// The induced action of a symmetric A on p-vectors,
//   D_A(v_1 ^ ... ^ v_p) = sum_m v_1 ^ ... ^ A v_m ^ ... ^ v_p,
// written in the basis e_I = e_{i_1} ^ ... ^ e_{i_p}, i_1 < ... < i_p, ordered
// lexicographically.
//
// Entry formula: with I, J increasing p-tuples,
//   (I, I)                     = sum_{i in I} a_ii
//   (I, J), I = J - {j} + {i}  = (-1)^{pos(i in I) + pos(j in J)} a_ij
//   otherwise                  = 0   (|I cap J| < p - 1)
// D_{e_J} replaces e_j (slot pos(j in J)) by a_ij e_i and moves e_i to its
// sorted slot pos(i in I); that move is |pos(i in I) - pos(j in J)|
// transpositions. The formula is checked in the tests against the defining
// action expanded with explicit permutation signs.

namespace kpos {

/// Largest basis size C(n,p) accepted by the derivation routines.
inline constexpr std::uint64_t kMaxDerivationDimension = 10000;

/// Lexicographic position of a strictly increasing tuple of 0-based indices
/// below n among all C(n, p) such tuples.
std::uint64_t lex_rank(std::size_t n, std::span<const std::size_t> tuple);
std::vector<std::size_t> lex_unrank(std::size_t n, std::size_t p, std::uint64_t rank);

struct DerivationMatrix {
  std::size_t n = 0;
  std::size_t p = 0;
  SymMatrix matrix;
};

DerivationMatrix derivation_matrix(const SymMatrix& a, std::size_t p);

/// lambda_[p]: the C(n,p) sums lambda_{i_1} + ... + lambda_{i_p} in lex order.
std::vector<double> lambda_brackets(std::span<const double> lambda, std::size_t p);

/// Sorted spectrum of D_A against sorted lambda(A)_[p], tolerance
/// 1e-7 (1 + ||A||_max).
InequalityReport spectrum_transfer_check(const SymMatrix& a, std::size_t p);

inline constexpr double kSpectrumTransferTolerance = 1e-7;

/// If lambda(A)_[p] lies in Gamma_k(C(n,p)), then (a_11..a_nn)_[p] does too
/// and S_k((a_11..a_nn)_[p]) >= S_k(lambda(A)_[p]). The diagonal vector is
/// read off diag(D_A); the spectrum of D_A is taken as lambda(A)_[p], the
/// identity checked by spectrum_transfer_check.
InequalityReport pcor_check(const SymMatrix& a, std::size_t p, std::size_t k,
                            const Tolerance& tol = default_tolerance);

}  // namespace kpos
