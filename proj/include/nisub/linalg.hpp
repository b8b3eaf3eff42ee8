#pragma once

#include "nisub/rational.hpp"

#include <optional>
#include <vector>

namespace nisub {

/// Row-major dense rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vector row(size_t r) const;
  Vector column(size_t c) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form of the span of `rows`, zero rows dropped.
/// `pivots[i]` is the pivot column of row i; pivots ascend.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<size_t> pivots;
};

Echelon reduced_echelon(std::vector<Vector> rows, size_t dim);
size_t rank(const std::vector<Vector>& rows, size_t dim);
size_t rank(const Matrix& m);

/// Basis of {x : row . x = 0 for every row}, in canonical reduced form.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, size_t dim);

/// Solves m x = b. Returns nullopt when inconsistent; picks the solution with
/// free variables set to zero otherwise.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Linear subspace of Q^dim held in canonical reduced echelon form, so that two
/// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(size_t ambient_dim, std::vector<Vector> vectors);
  static Subspace whole(size_t ambient_dim);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); nullopt if v is outside the subspace.
  std::optional<std::vector<Rational>> coordinates(const Vector& v) const;
  /// v minus its reduction against the basis; zero iff v is contained.
  Vector residual(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<size_t> pivots_;
};

}  // namespace nisub
