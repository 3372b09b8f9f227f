#include "tgha/linalg.hpp"

#include "tgha/errors.hpp"

#include <numeric>

namespace tgha {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

Vector Matrix::column(int j) const {
  Vector v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(int i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Cyclotomic& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Cyclotomic& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector dimension mismatch");
  Vector out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Cyclotomic& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Cyclotomic& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x *= c;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conjugate();
  }
  return out;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_skew() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

int Matrix::conductor() const {
  int n = 1;
  for (const auto& x : data_) n = std::lcm(n, x.conductor());
  return n;
}

Matrix Matrix::promote(int conductor) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = x.promote(conductor);
  return out;
}

std::string Matrix::key() const {
  std::string k;
  for (const auto& x : data_) {
    k += x.str(true);
    k += ';';
  }
  return k;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Vector> row_reduce(std::vector<Vector> rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < ncols && lead_row < rows.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[lead_row]);
    const Cyclotomic inv = rows[lead_row][col].inverse();
    for (auto& x : rows[lead_row]) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][col].is_zero()) continue;
      const Cyclotomic f = rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) {
        if (!rows[lead_row][j].is_zero()) rows[r][j] -= f * rows[lead_row][j];
      }
    }
    ++lead_row;
  }
  rows.resize(lead_row);
  return rows;
}

int rank(const Matrix& m) {
  std::vector<Vector> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return static_cast<int>(row_reduce(std::move(rows)).size());
}

Cyclotomic determinant(Matrix m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  const int n = m.rows();
  Cyclotomic det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Cyclotomic(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Cyclotomic inv = m(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Cyclotomic f = m(r, col) * inv;
      for (int j = col; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error("inverse of non-square matrix");
  const int n = m.rows();
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i) {
    Vector r = m.row(i);
    for (int j = 0; j < n; ++j) r.push_back(Cyclotomic(i == j ? 1 : 0));
    rows.push_back(std::move(r));
  }
  rows = row_reduce(std::move(rows));
  if (static_cast<int>(rows.size()) < n) return std::nullopt;
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i][i].is_one()) return std::nullopt;
    for (int j = 0; j < n; ++j) out(i, j) = rows[i][n + j];
  }
  return out;
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<Vector> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  rows = row_reduce(std::move(rows));
  const int n = m.cols();
  std::vector<int> pivot_of_col(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (!rows[r][c].is_zero()) {
        pivot_of_col[c] = static_cast<int>(r);
        break;
      }
    }
  }
  std::vector<Vector> basis;
  for (int free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vector v(static_cast<std::size_t>(n));
    v[free] = 1;
    for (int c = 0; c < n; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -rows[pivot_of_col[c]][free];
    }
    basis.push_back(std::move(v));
  }
  return row_reduce(std::move(basis));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  const int n = m.cols();
  std::vector<Vector> rows;
  for (int i = 0; i < m.rows(); ++i) {
    Vector r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  rows = row_reduce(std::move(rows));
  Vector x(static_cast<std::size_t>(n));
  for (const auto& r : rows) {
    int lead = -1;
    for (int c = 0; c <= n; ++c) {
      if (!r[c].is_zero()) {
        lead = c;
        break;
      }
    }
    if (lead == n) return std::nullopt;
    if (lead >= 0) x[lead] = r[n];
  }
  return x;
}

Cyclotomic bilinear(const Vector& u, const Matrix& m, const Vector& w) {
  Cyclotomic s;
  for (int i = 0; i < m.rows(); ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !w[j].is_zero()) s += u[i] * m(i, j) * w[j];
    }
  }
  return s;
}

Vector unit_vector(int n, int i) {
  Vector v(static_cast<std::size_t>(n));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

} // namespace tgha
