#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <span>
#include <vector>

#include "kpos/error.hpp"

// All indices in the C++ API are 0-based. The CLI and the file formats
// document indices 1-based.

namespace kpos {

/// Dense row-major real matrix. Used for orthogonal factors, eigenvector
/// bases and as the "n^2 independent coordinates" view of a matrix when
/// differentiating minor sums.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  double max_abs() const;
  double trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// max |a(i,j) - b(i,j)|; the shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Real symmetric matrix in packed upper-triangle storage, so that reading
/// (i,j) and (j,i) returns the same stored value. Entries are finite.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  /// Accepts a square matrix symmetric within `tol` (absolute) and averages
  /// the two triangles. Throws DomainError otherwise.
  static SymMatrix from_dense(const Matrix& m, double tol = 1e-12);
  /// Packed upper triangle, row by row: (0,0),(0,1),..,(0,n-1),(1,1),...
  static SymMatrix from_packed(std::size_t n, std::span<const double> packed);

  std::size_t n() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v);

  std::span<const double> packed() const noexcept { return data_; }
  std::vector<double> diagonal_entries() const;
  Matrix to_dense() const;

  double max_abs() const;
  /// max_{i != j} |a(i,j)|
  double off_diagonal_max() const;
  bool is_diagonal() const { return off_diagonal_max() == 0.0; }
  double trace() const;

  SymMatrix operator+(const SymMatrix& other) const;
  SymMatrix operator*(double c) const;
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  static std::size_t packed_size(std::size_t n) noexcept { return n * (n + 1) / 2; }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * (2 * n_ - i + 1) / 2 + (j - i);
  }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// Strictly increasing subset of {0, .., n-1}.
class IndexSet {
 public:
  IndexSet(std::size_t n, std::vector<std::size_t> members);

  static IndexSet full(std::size_t n);
  /// {0..n-1} minus the given indices.
  static IndexSet all_but(std::size_t n, std::initializer_list<std::size_t> removed);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t operator[](std::size_t r) const { return members_[r]; }
  std::span<const std::size_t> members() const noexcept { return members_; }
  bool contains(std::size_t i) const;

  IndexSet complement() const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

/// Square matrix with orthonormal columns, checked at construction.
class OrthogonalMatrix {
 public:
  static constexpr double kResidualBound = 1e-10;

  /// Throws DomainError if ||Q^T Q - I||_max exceeds `tol`.
  explicit OrthogonalMatrix(Matrix q, double tol = kResidualBound);
  static OrthogonalMatrix identity(std::size_t n);

  std::size_t n() const noexcept { return q_.rows(); }
  const Matrix& matrix() const noexcept { return q_; }
  double operator()(std::size_t i, std::size_t j) const { return q_(i, j); }
  OrthogonalMatrix transpose() const;

  /// ||Q^T Q - I||_max
  static double residual(const Matrix& q);

 private:
  OrthogonalMatrix(Matrix q, std::nullptr_t) : q_(std::move(q)) {}
  Matrix q_;
};

SymMatrix principal_submatrix(const SymMatrix& a, const IndexSet& j);
Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> idx);
/// A[{i}^c]
SymMatrix delete_index(const SymMatrix& a, std::size_t i);

/// W^T A W, symmetrized after the product.
SymMatrix conjugate(const SymMatrix& a, const OrthogonalMatrix& w);

/// A^{j,0}: every off-diagonal entry in row and column j set to zero.
SymMatrix zero_border(const SymMatrix& a, std::size_t j);

struct BorderReduction {
  /// W = P (U + 1) where P moves index j to the last slot and U diagonalizes
  /// A[{j}^c].
  OrthogonalMatrix w;
  /// B = W^T A W with B[{last}^c] diagonal and B(last,last) = A(j,j).
  SymMatrix reduced;
};

BorderReduction border_reduce(const SymMatrix& a, std::size_t j);

}  // namespace kpos
