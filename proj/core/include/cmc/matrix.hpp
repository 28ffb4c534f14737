#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "cmc/rational.hpp"

namespace cmc {

// Dense matrix of exact rationals. All public indices are 1-based, so
// at(i, j) is the entry in row i and column j exactly as written in the
// classical determinant identities this library computes.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix diagonal(const std::vector<Rational>& entries);
  static RMatrix column(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  // Order of a square matrix; DimensionError on a rectangular one.
  std::size_t order() const;

  const Rational& at(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j);

  RMatrix transpose() const;
  RMatrix scaled(const Rational& c) const;
  bool is_zero() const;

  std::vector<Rational> row_vec(std::size_t i) const;
  std::vector<Rational> col_vec(std::size_t j) const;
  // The j-th column as an n-by-1 matrix.
  RMatrix column_matrix(std::size_t j) const;

  RMatrix operator-() const;
  RMatrix operator+(const RMatrix& o) const;
  RMatrix operator-(const RMatrix& o) const;
  RMatrix operator*(const RMatrix& o) const;  // DimensionError on shape mismatch

  bool operator==(const RMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;

  std::size_t pos(std::size_t i, std::size_t j) const { return (i - 1) * cols_ + (j - 1); }
  void check_index(std::size_t i, std::size_t j) const;
};

// Columns of the given matrices glued side by side; all operands must have
// the same row count. An empty list yields a 0x0 matrix.
RMatrix hcat(const std::vector<RMatrix>& parts);

std::ostream& operator<<(std::ostream& os, const RMatrix& a);

}  // namespace cmc
