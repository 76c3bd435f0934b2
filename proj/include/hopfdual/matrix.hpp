#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfdual/field.hpp"

namespace hopfdual {

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows);
  /// Convenience for tests and presets: integer entries.
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RowEchelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix reduced{Field::rationals(), 0, 0};
};

/// Reduced row-echelon form by Gaussian elimination; the pivot in each
/// column is the first nonzero entry at or below the current row.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per free column (free
/// variable set to 1, other free variables 0).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Particular solution of m x = b with free variables set to zero, or
/// nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Kronecker product; the pair (i, j) maps to i * b.rows() + j (and
/// likewise for columns).
Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker product of coordinate vectors with the same convention.
Vector kron(const Vector& a, const Vector& b);

/// Basis (pivot columns of the rref) of the span of the given vectors.
std::vector<Vector> span_basis(Field field, const std::vector<Vector>& vectors, std::size_t dim);

/// Dimension of the span of the given vectors.
std::size_t span_dimension(Field field, const std::vector<Vector>& vectors, std::size_t dim);

/// Basis of the intersection of two subspaces given by spanning sets.
std::vector<Vector> intersect_subspaces(Field field, const std::vector<Vector>& a, const std::vector<Vector>& b,
                                        std::size_t dim);

/// Row-major flattening, used to treat End(V) as a vector space.
Vector flatten(const Matrix& m);

Vector add(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& s);

}  // namespace hopfdual
