#include "hopfdual/matrix.hpp"

#include "hopfdual/error.hpp"

namespace hopfdual {

namespace {

void require_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.describe() + " vs " + b.describe());
}

void require_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1L);
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_shape(rows[r].size() == cols, "row length");
    for (std::size_t c = 0; c < cols; ++c) {
      require_field(field, rows[r][c].field());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_shape(columns[c].size() == rows, "column length");
    for (std::size_t r = 0; r < rows; ++r) {
      require_field(field, columns[c][r].field());
      m(r, c) = columns[c][r];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_shape(rows[r].size() == cols, "ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_field(field_, other.field_);
  require_shape(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_field(field_, other.field_);
  require_shape(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  require_field(field_, s.field());
  for (auto& x : entries_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  require_shape(a.cols_ == b.rows_, "matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require_shape(a.cols_ == v.size(), "matrix-vector product");
  Vector out = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (!aik.is_zero() && !v[k].is_zero()) out[i] += aik * v[k];
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out;
  out.reduced = m;
  Matrix& r = out.reduced;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && r(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t c = col; c < cols; ++c) std::swap(r(pivot, c), r(row, c));
    Scalar inv = r(row, col).inverse();
    for (std::size_t c = col; c < cols; ++c)
      if (!r(row, c).is_zero()) r(row, c) *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == row || r(other, col).is_zero()) continue;
      Scalar factor = r(other, col);
      for (std::size_t c = col; c < cols; ++c)
        if (!r(row, c).is_zero()) r(other, c) -= factor * r(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar(m.field(), 1L);
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require_shape(b.size() == m.rows(), "right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    require_field(m.field(), b[r].field());
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_shape(m.is_square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(m.field(), 1L);
  }
  RowEchelon e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  if (a.empty() || b.empty()) return {};
  require_field(a.front().field(), b.front().field());
  Vector out = zero_vector(a.front().field(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

std::vector<Vector> span_basis(Field field, const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_columns(field, vectors, dim);
  RowEchelon e = rref(m);
  std::vector<Vector> out;
  for (auto p : e.pivots) out.push_back(vectors[p]);
  return out;
}

std::size_t span_dimension(Field field, const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(field, vectors, dim));
}

std::vector<Vector> intersect_subspaces(Field field, const std::vector<Vector>& a, const std::vector<Vector>& b,
                                        std::size_t dim) {
  std::vector<Vector> ab = span_basis(field, a, dim);
  std::vector<Vector> bb = span_basis(field, b, dim);
  if (ab.empty() || bb.empty()) return {};
  // x = sum s_i a_i = sum t_j b_j
  std::vector<Vector> cols = ab;
  for (const auto& v : bb) cols.push_back(scale(v, Scalar(field, -1L)));
  Matrix m = Matrix::from_columns(field, cols, dim);
  std::vector<Vector> out;
  for (const auto& k : kernel_basis(m)) {
    Vector x = zero_vector(field, dim);
    for (std::size_t i = 0; i < ab.size(); ++i)
      if (!k[i].is_zero()) x = add(x, scale(ab[i], k[i]));
    out.push_back(std::move(x));
  }
  return out;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  require_shape(a.size() == b.size(), "vector sum");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector scale(const Vector& a, const Scalar& s) {
  Vector out = a;
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace hopfdual
