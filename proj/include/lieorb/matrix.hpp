#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieorb/rational.hpp"

namespace lieorb {

/// Dense matrix of exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

struct RrefResult {
  Matrix reduced;                   // unique reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
};

/// Reduced row-echelon form. Fraction-free (Bareiss) forward elimination on a
/// denominator-cleared copy, then exact normalization; no rounding anywhere.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one kernel vector per matrix row, canonicalized
/// (rows in reduced echelon form).
Matrix kernel_basis(const Matrix& m);

/// Solves a x = b exactly; empty when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace lieorb
