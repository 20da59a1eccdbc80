#pragma once

#include <optional>
#include <span>
#include <vector>

#include "colorder/scalars.hpp"

namespace colorder {

using Vector = std::vector<CycloScalar>;

Vector zero_vector(std::size_t n, int conductor);
bool is_zero(std::span<const CycloScalar> v);

/// Dense row-major matrix over Q(zeta_m); every entry shares the conductor.
class Matrix {
 public:
  Matrix() : Matrix(0, 0, 1) {}
  Matrix(std::size_t rows, std::size_t cols, int conductor);

  static Matrix identity(std::size_t n, int conductor);
  /// Each row must have exactly `cols` entries.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, int conductor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }

  CycloScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<CycloScalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const CycloScalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  void append_row(std::span<const CycloScalar> v);
  void swap_rows(std::size_t a, std::size_t b);

  /// this * v
  Vector apply(std::span<const CycloScalar> v) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  int conductor_;
  std::vector<CycloScalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot is the
/// leftmost column with a nonzero entry among the remaining rows, taken from
/// the topmost such row. Zero rows are dropped.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);

/// Streams rows into a reduced row echelon basis of their span. Memory is
/// bounded by the rank, so tall constraint systems never materialize. The
/// final basis is the same canonical RREF that rref() returns on the stacked
/// rows.
class RowReducer {
 public:
  RowReducer(std::size_t cols, int conductor);

  /// Returns true when the row increased the rank.
  bool add_row(Vector v);
  std::size_t rank() const { return basis_.size(); }
  bool full() const { return basis_.size() == cols_; }

  Matrix basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void reduce(Vector& v) const;

  std::size_t cols_;
  int conductor_;
  std::vector<Vector> basis_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

/// Subspace of Q(zeta_m)^n held as a canonical RREF basis, so equality of
/// subspaces is equality of bases.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, int conductor);

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim, int conductor);
  static Subspace row_space(const Matrix& m);
  static Subspace full(std::size_t ambient_dim, int conductor);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  int conductor() const { return basis_.conductor(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const CycloScalar> v) const;
  /// Coefficients of v in the basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(std::span<const CycloScalar> v) const;
  /// Linear combination of basis rows.
  Vector combine(std::span<const CycloScalar> coeffs) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(Matrix reduced, std::vector<std::size_t> pivots, std::size_t ambient);

  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// One solution of m x = b with free variables set to zero.
std::optional<Vector> solve(const Matrix& m, std::span<const CycloScalar> b);

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);
/// t is a subspace of s.
bool subspace_contains(const Subspace& s, const Subspace& t);
bool subspace_equal(const Subspace& s, const Subspace& t);

}  // namespace colorder
