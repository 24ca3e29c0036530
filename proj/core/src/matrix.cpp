#include "kpos/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "kpos/eigen.hpp"

namespace kpos {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("Matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

// ---------------------------------------------------------------------------

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(packed_size(n), 0.0) {
  if (n == 0) throw DomainError("SymMatrix: dimension must be at least 1");
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(SymMatrix::from_dense(Matrix(rows))) {}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i, 1.0);
  return a;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  SymMatrix a(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a.set(i, i, d[i]);
  return a;
}

SymMatrix SymMatrix::from_dense(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("SymMatrix: matrix is not square");
  SymMatrix a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol)
        throw DomainError("SymMatrix: entries (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") and its transpose differ");
      a.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    }
  return a;
}

SymMatrix SymMatrix::from_packed(std::size_t n, std::span<const double> packed) {
  if (packed.size() != packed_size(n)) throw DomainError("SymMatrix: packed size mismatch");
  SymMatrix a(n);
  for (std::size_t i = 0; i < packed.size(); ++i) {
    if (!std::isfinite(packed[i])) throw DomainError("SymMatrix: non-finite entry");
    a.data_[i] = packed[i];
  }
  return a;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  if (i >= n_ || j >= n_) throw DomainError("SymMatrix::set: index out of range");
  if (!std::isfinite(v)) throw DomainError("SymMatrix::set: non-finite entry");
  data_[index(i, j)] = v;
}

std::vector<double> SymMatrix::diagonal_entries() const {
  std::vector<double> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

Matrix SymMatrix::to_dense() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double SymMatrix::off_diagonal_max() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

SymMatrix SymMatrix::operator+(const SymMatrix& other) const {
  if (other.n_ != n_) throw DomainError("SymMatrix +: dimension mismatch");
  SymMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

SymMatrix SymMatrix::operator*(double c) const {
  SymMatrix r(*this);
  for (double& v : r.data_) v *= c;
  return r;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw DomainError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.packed().size(); ++i)
    m = std::max(m, std::abs(a.packed()[i] - b.packed()[i]));
  return m;
}

// ---------------------------------------------------------------------------

IndexSet::IndexSet(std::size_t n, std::vector<std::size_t> members)
    : n_(n), members_(std::move(members)) {
  for (std::size_t r = 0; r < members_.size(); ++r) {
    if (members_[r] >= n_) throw DomainError("IndexSet: index out of range");
    if (r > 0 && members_[r] <= members_[r - 1])
      throw DomainError("IndexSet: members must be strictly increasing");
  }
}

IndexSet IndexSet::full(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return IndexSet(n, std::move(m));
}

IndexSet IndexSet::all_but(std::size_t n, std::initializer_list<std::size_t> removed) {
  for (std::size_t r : removed)
    if (r >= n) throw DomainError("IndexSet: index out of range");
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) m.push_back(i);
  return IndexSet(n, std::move(m));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < n_; ++i)
    if (!contains(i)) m.push_back(i);
  return IndexSet(n_, std::move(m));
}

// ---------------------------------------------------------------------------

OrthogonalMatrix::OrthogonalMatrix(Matrix q, double tol) : q_(std::move(q)) {
  if (q_.rows() != q_.cols()) throw DomainError("OrthogonalMatrix: not square");
  const double r = residual(q_);
  if (!(r <= tol))
    throw DomainError("OrthogonalMatrix: orthogonality residual " + std::to_string(r));
}

OrthogonalMatrix OrthogonalMatrix::identity(std::size_t n) {
  return OrthogonalMatrix(Matrix::identity(n), nullptr);
}

OrthogonalMatrix OrthogonalMatrix::transpose() const {
  return OrthogonalMatrix(q_.transpose(), nullptr);
}

double OrthogonalMatrix::residual(const Matrix& q) {
  const std::size_t n = q.cols();
  double m = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < q.rows(); ++i) dot += q(i, a) * q(i, b);
      m = std::max(m, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  return m;
}

// ---------------------------------------------------------------------------

SymMatrix principal_submatrix(const SymMatrix& a, const IndexSet& j) {
  if (j.ambient() != a.n()) throw DomainError("principal_submatrix: ambient dimension mismatch");
  if (j.empty()) throw DomainError("principal_submatrix: empty index set");
  SymMatrix s(j.size());
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = r; c < j.size(); ++c) s.set(r, c, a(j[r], j[c]));
  return s;
}

Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> idx) {
  Matrix s(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = a(idx[r], idx[c]);
  return s;
}

SymMatrix delete_index(const SymMatrix& a, std::size_t i) {
  return principal_submatrix(a, IndexSet::all_but(a.n(), {i}));
}

SymMatrix conjugate(const SymMatrix& a, const OrthogonalMatrix& w) {
  if (w.n() != a.n()) throw DomainError("conjugate: dimension mismatch");
  const Matrix& q = w.matrix();
  const Matrix prod = q.transpose() * (a.to_dense() * q);
  SymMatrix r(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i; j < a.n(); ++j) r.set(i, j, 0.5 * (prod(i, j) + prod(j, i)));
  return r;
}

SymMatrix zero_border(const SymMatrix& a, std::size_t j) {
  if (j >= a.n()) throw DomainError("zero_border: index out of range");
  SymMatrix r(a);
  for (std::size_t i = 0; i < a.n(); ++i)
    if (i != j) r.set(i, j, 0.0);
  return r;
}

BorderReduction border_reduce(const SymMatrix& a, std::size_t j) {
  const std::size_t n = a.n();
  if (n < 2) throw DomainError("border_reduce: dimension must be at least 2");
  if (j >= n) throw DomainError("border_reduce: index out of range");

  const IndexSet rest = IndexSet::all_but(n, {j});
  const SymMatrix block = principal_submatrix(a, rest);

  Matrix u = Matrix::identity(n - 1);
  if (!block.is_diagonal()) u = eigen(block).vectors;

  // W(rest[r], c) = U(r, c) for c < n-1 and W(j, n-1) = 1.
  Matrix w(n, n);
  for (std::size_t r = 0; r < n - 1; ++r)
    for (std::size_t c = 0; c < n - 1; ++c) w(rest[r], c) = u(r, c);
  w(j, n - 1) = 1.0;

  OrthogonalMatrix wq(std::move(w));
  SymMatrix b = conjugate(a, wq);
  // The reduced block is diagonal by construction; drop rotation residue.
  for (std::size_t r = 0; r < n - 1; ++r)
    for (std::size_t c = r + 1; c < n - 1; ++c) b.set(r, c, 0.0);
  b.set(n - 1, n - 1, a(j, j));
  return {std::move(wq), std::move(b)};
}

}  // namespace kpos
