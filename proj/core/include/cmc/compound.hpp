#pragma once

#include <cstddef>
#include <vector>

#include "cmc/combo.hpp"
#include "cmc/matrix.hpp"

namespace cmc {

// The p-th compound of an order-n matrix: the C(n,p) x C(n,p) matrix of
// all order-p minors, rows and columns indexed by the lexicographically
// ranked p-subsets.
struct CompoundMatrix {
  std::size_t n = 0;
  std::size_t p = 0;
  RMatrix body;

  bool operator==(const CompoundMatrix& o) const = default;
};

// The diagonal of signs (-1)^{sum of subset indices} over the ranked
// p-subsets of {1..n}. This is not an alternation: consecutive subsets can
// carry equal signs (first at n=5, p=2).
struct SignDiagonal {
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<int> signs;

  RMatrix as_matrix() const;
};

SignDiagonal sign_diagonal(std::size_t n, std::size_t p);

// Anti-diagonal permutation matrix of the given order: entry (r, N+1-r)
// is 1. Conjugating by it reverses the subset order, which is exactly the
// rank map of taking complements.
RMatrix reversal_matrix(std::size_t order);

// The minor of a on the given row and column subsets (equal sizes
// required). Order 0 gives 1. Computed by the Leibniz oracle up to order 8
// and by fraction-free elimination above that.
Rational minor_det(const RMatrix& a, const Combo& row_set, const Combo& col_set);

// m_p(a). Requires square a and 1 <= p <= n. m_1(a) = a and m_n(a) is the
// 1x1 matrix [det a].
CompoundMatrix compound(const RMatrix& a, std::size_t p);

// Entry (R, S) is the complementary minor of a on rows outside R and
// columns outside S (no signs attached).
CompoundMatrix complementary_compound(const RMatrix& a, std::size_t p);

// The signed complementary compound m~_p(a): the matrix satisfying
// m_p(a) * m~_p(a) = det(a) * I. Entry (R, S) carries the sign
// (-1)^{sum R + sum S} in front of the complementary minor taken on rows
// outside S and columns outside R (note the transposition).
CompoundMatrix adjugate_compound(const RMatrix& a, std::size_t p);

}  // namespace cmc
