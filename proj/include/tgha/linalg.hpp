#pragma once

#include "tgha/cyclo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tgha {

using Vector = std::vector<Cyclotomic>;

/// Dense row-major matrix over cyclotomics.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  /// Columns given as vectors.
  static Matrix from_columns(const std::vector<Vector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Cyclotomic& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  Vector column(int j) const;
  Vector row(int i) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Cyclotomic& c) const;

  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  Cyclotomic trace() const;
  bool is_zero() const;
  bool is_skew() const;

  /// Largest conductor among the entries.
  int conductor() const;
  Matrix promote(int conductor) const;
  /// Canonical text of the entries; equal matrices at the same conductor give equal keys.
  std::string key() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cyclotomic> data_;
};

/// Nonzero rows of the reduced row echelon form of `rows`.
std::vector<Vector> row_reduce(std::vector<Vector> rows);
int rank(const Matrix& m);
Cyclotomic determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}, in reduced echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Bilinear pairing u^T m w.
Cyclotomic bilinear(const Vector& u, const Matrix& m, const Vector& w);

Vector unit_vector(int n, int i);
bool is_zero(const Vector& v);

} // namespace tgha
