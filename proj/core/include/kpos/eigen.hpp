#pragma once

#include <vector>

#include "kpos/matrix.hpp"

namespace kpos {

struct EigenOptions {
  /// Stop once the off-diagonal Frobenius norm is at most this times ||A||_F.
  double relative_tolerance = 1e-13;
  int max_sweeps = 30;
};

/// A = Q diag(values) Q^T with values sorted descending.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;      // column c is the eigenvector for values[c]
  double residual = 0; // off-diagonal Frobenius norm of Q^T A Q at exit
  int sweeps = 0;

  /// Q diag(values) Q^T
  Matrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver. Throws NumericError carrying the achieved
/// off-diagonal norm when the sweep cap is reached first.
EigenDecomposition eigen(const SymMatrix& a, const EigenOptions& opts = {});

/// Eigenvalues only, sorted descending.
std::vector<double> eigenvalues(const SymMatrix& a, const EigenOptions& opts = {});

}  // namespace kpos
