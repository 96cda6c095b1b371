#pragma once

// Exact linear algebra over the rationals.
//
// Every matrix in taumatch is a dense grid of GMP rationals. Sizes are tiny
// (tens of rows), so plain Gauss-Jordan elimination is used everywhere.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taumatch {

/// Element of the ground field Q. mpq_class keeps values in lowest terms
/// with a positive denominator once canonicalized.
using Scalar = mpq_class;

/// Parses "3", "-2/3", " 4 / 6 " into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Convenience for tests and literals: integer entries, row-major.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
  /// Column vector.
  static Matrix column(const std::vector<Scalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;
  Scalar trace() const;

  Matrix column_at(std::size_t c) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);
  Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const Scalar& s) { return lhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix power(const Matrix& m, std::size_t exponent);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row of `reduced`
};

RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; one column per free variable.
Matrix kernel_basis(const Matrix& m);

/// Linearly independent columns of `m` spanning its column space.
Matrix column_space_basis(const Matrix& m);

/// Some x with m x = rhs, or nullopt when rhs leaves the column span.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Coefficients c_0..c_n (c_n = 1) of det(t I - m), via Faddeev-LeVerrier.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// Distinct rational roots of a polynomial given low degree first.
/// Roots whose search would need factoring an integer beyond a trial
/// division bound are skipped; the result is then possibly incomplete.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coefficients);

bool is_nilpotent(const Matrix& m);

}  // namespace taumatch
