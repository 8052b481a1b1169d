#pragma once

// Dense linear algebra over Number. Matrices whose entries are all exact go
// through fraction-free elimination over the integers; anything else is
// eliminated numerically with complete pivoting and a relative threshold.

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/numerics.hpp"

namespace waring {

using Vector = std::vector<Number>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Number& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Number& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_exact() const;
  long precision() const;  // max entry precision, 0 when exact
  Matrix transpose() const;
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  BigFloat max_abs() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Number> data_;
};

// Reduced row echelon form. `pivots[k]` is the pivot column of row k, for
// k < rank; rows at index >= rank are (numerically) zero.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Working precision used when a matrix is approximate; exact matrices
// ignore it. `precision` also fixes the rank threshold 2^(-precision/2)
// relative to the largest entry.
Echelon row_reduce(const Matrix& a, long precision);

std::size_t rank(const Matrix& a, long precision);

// Basis of {x : a x = 0}. Exact bases are made primitive (integer entries,
// content 1, first nonzero entry positive).
std::vector<Vector> kernel(const Matrix& a, long precision);

// Exact: a solution of a x = b, or nullopt when inconsistent.
// Approximate: the least-squares solution (caller checks the residual).
std::optional<Vector> solve(const Matrix& a, const Vector& b, long precision);

// Throws InvalidInput when singular.
Matrix inverse(const Matrix& a, long precision);

// Exact determinant (Bareiss); throws InternalError on approximate input.
Rational determinant(const Matrix& a);
// Determinant of an exact or approximate matrix (partial pivoting when
// approximate).
Number determinant(const Matrix& a, long precision);

// Scales an exact vector to a primitive integer vector with positive
// leading entry. Approximate vectors are scaled to unit max-modulus.
Vector normalize_direction(const Vector& v, long precision);

}  // namespace waring
