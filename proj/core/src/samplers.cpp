#include "cmc/samplers.hpp"

#include <utility>

#include "cmc/errors.hpp"
#include "cmc/oracles.hpp"

namespace cmc {

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw DegenerateInputError("empty sampling range");
  return eng_() % bound;
}

long long Sampler::int_in(long long lo, long long hi) {
  if (lo > hi) throw DegenerateInputError("empty sampling range");
  std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(below(width));
}

Rational Sampler::rational(long long max_num, long long max_den) {
  long long n = int_in(-max_num, max_num);
  long long d = int_in(1, max_den);
  return Rational(n, d);
}

RMatrix Sampler::matrix(std::size_t rows, std::size_t cols, long long max_num,
                        long long max_den) {
  RMatrix a(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) a.at(i, j) = rational(max_num, max_den);
  return a;
}

RMatrix Sampler::integer_matrix(std::size_t rows, std::size_t cols, long long max_abs) {
  return matrix(rows, cols, max_abs, 1);
}

RMatrix Sampler::invertible(std::size_t n, long long max_num, long long max_den) {
  for (;;) {
    RMatrix a = matrix(n, n, max_num, max_den);
    if (!det_bareiss(a).is_zero()) return a;
  }
}

RMatrix Sampler::singular_of_rank(std::size_t n, std::size_t r, long long max_abs) {
  if (r > n) throw DegenerateInputError("target rank exceeds the order");
  if (r == 0) return RMatrix(n, n);
  for (;;) {
    RMatrix left = integer_matrix(n, r, max_abs);
    RMatrix right = integer_matrix(r, n, max_abs);
    RMatrix a = left * right;
    if (rank_of(a) == r) return a;
  }
}

RMatrix Sampler::special_linear(std::size_t n, long long max_num, long long max_den) {
  RMatrix a = RMatrix::identity(n);
  if (n < 2) return a;
  std::size_t steps = 2 * n + 2;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = 1 + static_cast<std::size_t>(below(n));
    std::size_t j = 1 + static_cast<std::size_t>(below(n));
    if (i == j) continue;
    Rational lambda = rational(max_num, max_den);
    if (lambda.is_zero()) continue;
    // Row shear r_i += lambda * r_j keeps the determinant at 1.
    for (std::size_t c = 1; c <= n; ++c) a.at(i, c) += lambda * a.at(j, c);
  }
  return a;
}

RMatrix Sampler::special_orthogonal(std::size_t n) {
  RMatrix a = RMatrix::identity(n);
  if (n < 2) return a;
  std::size_t steps = n * (n - 1) / 2 + 1;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = 1 + static_cast<std::size_t>(below(n));
    std::size_t j = 1 + static_cast<std::size_t>(below(n));
    if (i == j) continue;
    // Pythagorean cosine/sine pair: c = (m^2-k^2)/(m^2+k^2), s = 2mk/(m^2+k^2).
    long long m = int_in(2, 6);
    long long k = int_in(1, m - 1);
    Rational c(m * m - k * k, m * m + k * k);
    Rational sv(2 * m * k, m * m + k * k);
    if (below(2) == 0) sv = -sv;
    // Left-multiply by the rotation in the (i, j) plane.
    for (std::size_t col = 1; col <= n; ++col) {
      Rational ri = a.at(i, col);
      Rational rj = a.at(j, col);
      a.at(i, col) = c * ri - sv * rj;
      a.at(j, col) = sv * ri + c * rj;
    }
  }
  // Stir with a double transposition (an even permutation, so the
  // determinant stays 1) when the order allows one.
  if (n >= 4 && below(2) == 0) {
    for (std::size_t col = 1; col <= n; ++col) {
      std::swap(a.at(1, col), a.at(2, col));
      std::swap(a.at(3, col), a.at(4, col));
    }
  }
  return a;
}

}  // namespace cmc
