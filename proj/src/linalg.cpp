#include "nisub/linalg.hpp"

#include <stdexcept>

namespace nisub {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(size_t c) const {
  Vector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vector out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (size_t c = 0; c < other.cols_; ++c) {
        if (sgn(other(k, c)) != 0) out(r, c) += a * other(k, c);
      }
    }
  return out;
}

Echelon reduced_echelon(std::vector<Vector> rows, size_t dim) {
  Echelon e;
  size_t pivot_row = 0;
  for (size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    size_t found = pivot_row;
    while (found < rows.size() && sgn(rows[found][col]) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    Vector& p = rows[pivot_row];
    if (p[col] != 1) {
      Rational inv = 1 / p[col];
      for (size_t c = col; c < dim; ++c) {
        if (sgn(p[c]) != 0) p[c] *= inv;
      }
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || sgn(rows[r][col]) == 0) continue;
      Rational f = rows[r][col];
      for (size_t c = col; c < dim; ++c) {
        if (sgn(p[c]) != 0) rows[r][c] -= f * p[c];
      }
    }
    e.pivots.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  e.rows = std::move(rows);
  return e;
}

size_t rank(const std::vector<Vector>& rows, size_t dim) { return reduced_echelon(rows, dim).rows.size(); }

size_t rank(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rank(rows, m.cols());
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, size_t dim) {
  Echelon e = reduced_echelon(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v(dim, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return reduced_echelon(std::move(basis), dim).rows;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  size_t n = m.cols();
  std::vector<Vector> aug;
  aug.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  Echelon e = reduced_echelon(std::move(aug), n + 1);
  Vector x(n, Rational(0));
  for (size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][n];
  }
  return x;
}

Subspace Subspace::span(size_t ambient_dim, std::vector<Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: dimension mismatch");
  }
  Subspace s(ambient_dim);
  Echelon e = reduced_echelon(std::move(vectors), ambient_dim);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(size_t ambient_dim) {
  std::vector<Vector> vs;
  for (size_t i = 0; i < ambient_dim; ++i) vs.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, std::move(vs));
}

Vector Subspace::residual(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
  Vector r = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    const Vector& b = basis_[i];
    for (size_t c = pivots_[i]; c < ambient_; ++c) {
      if (sgn(b[c]) != 0) r[c] -= f * b[c];
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Rational> c(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, std::move(vs));
}

Subspace Subspace::intersection(const Subspace& other) const {
  // x in both iff x is orthogonal to both annihilators.
  std::vector<Vector> constraints = nullspace(basis_, ambient_);
  std::vector<Vector> more = nullspace(other.basis_, ambient_);
  constraints.insert(constraints.end(), more.begin(), more.end());
  return span(ambient_, nullspace(constraints, ambient_));
}

}  // namespace nisub
