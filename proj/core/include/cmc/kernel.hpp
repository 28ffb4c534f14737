#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmc/matrix.hpp"

namespace cmc {

enum class KernelSource {
  Adjugate,             // corank 1: a nonzero adjugate column
  Order2Cofactors,      // corank 2, order 4: columns of the two-row cofactor matrix
  EliminationFallback,  // anything else: reduced-echelon extraction
};

struct KernelResult {
  std::size_t corank = 0;
  std::vector<RMatrix> basis;  // n-by-1 columns, annihilated by the matrix
  KernelSource source = KernelSource::EliminationFallback;
  // Row pair used when source == Order2Cofactors.
  std::size_t pair_r1 = 0;
  std::size_t pair_r2 = 0;

  std::string source_label() const;
};

// Kernel of a rank n-1 matrix, read off the adjugate: the first nonzero
// column spans the nullspace. CorankMismatchError when rank != n-1.
KernelResult kernel_corank1(const RMatrix& a);

// For a 4x4 matrix and a row pair i1 < i2: the 4x4 matrix K whose columns
// are built from the six order-2 minors M^{jk} of rows (i1, i2),
//
//   [  M^23   M^24   M^34    0   ]
//   [ -M^13  -M^14    0     M^34 ]
//   [  M^12    0    -M^14  -M^24 ]
//   [   0     M^12   M^13   M^23 ]
//
// Every column is annihilated by rows i1 and i2 of a; the quadratic
// relation M^12 M^34 - M^13 M^24 + M^14 M^23 = 0 caps rank(K) at 2.
RMatrix cofactor_matrix_order2(const RMatrix& a, std::size_t i1, std::size_t i2);

// Kernel of a rank-2 4x4 matrix from the first row pair (in lex order)
// whose cofactor matrix is nonzero: the two columns holding the first
// nonzero minor. CorankMismatchError when rank != 2.
KernelResult kernel_corank2_4x4(const RMatrix& a);

// Dispatch on the corank: 0 gives an empty basis, 1 the adjugate route,
// 2 at order 4 the cofactor template, and everything else falls back to
// echelon extraction.
KernelResult kernel_of(const RMatrix& a);

}  // namespace cmc
