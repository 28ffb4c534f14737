#include "cmc/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>
#include <utility>

#include "cmc/errors.hpp"

namespace cmc {

namespace {

constexpr std::size_t kPermutationCap = 8;

// Row echelon reduction in place. Returns the pivot columns; when
// reduce_up is set the result is the full RREF with unit pivots.
std::vector<std::size_t> echelonize(RMatrix& m, bool reduce_up) {
  std::vector<std::size_t> pivots;
  std::size_t r = 1;
  for (std::size_t c = 1; c <= m.cols() && r <= m.rows(); ++c) {
    std::size_t p = 0;
    for (std::size_t i = r; i <= m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == 0) continue;
    if (p != r) {
      for (std::size_t j = 1; j <= m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
    }
    if (reduce_up) {
      Rational inv = m.at(r, c);
      for (std::size_t j = c; j <= m.cols(); ++j) m.at(r, j) /= inv;
    }
    for (std::size_t i = reduce_up ? 1 : r + 1; i <= m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = c; j <= m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational det_permutation(const RMatrix& a) {
  std::size_t n = a.order();
  if (n > kPermutationCap) {
    throw OracleSizeError("permutation determinant capped at order " +
                          std::to_string(kPermutationCap) + ", got " + std::to_string(n));
  }
  if (n == 0) return Rational(1);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  auto term = [&](int sgn) {
    Rational t = a.at(1, perm[0]);
    for (std::size_t k = 1; k < n; ++k) t *= a.at(k + 1, perm[k]);
    return sgn < 0 ? -t : t;
  };

  // Heap's algorithm: successive permutations differ by one transposition,
  // so the parity just flips each step.
  Rational acc = term(1);
  int sgn = 1;
  std::vector<std::size_t> c(n, 0);
  std::size_t i = 1;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      sgn = -sgn;
      acc += term(sgn);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return acc;
}

Rational det_bareiss(const RMatrix& a) {
  std::size_t n = a.order();
  if (n == 0) return Rational(1);
  RMatrix m = a;
  int sgn = 1;
  Rational prev(1);
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t p = 0;
      for (std::size_t i = k + 1; i <= n; ++i) {
        if (!m.at(i, k).is_zero()) {
          p = i;
          break;
        }
      }
      if (p == 0) return Rational(0);
      for (std::size_t j = 1; j <= n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sgn = -sgn;
    }
    const Rational pivot = m.at(k, k);
    for (std::size_t i = k + 1; i <= n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m.at(i, j) = (m.at(i, j) * pivot - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = Rational(0);
    }
    prev = pivot;
  }
  Rational det = m.at(n, n);
  return sgn < 0 ? -det : det;
}

std::size_t rank_of(const RMatrix& a) {
  RMatrix m = a;
  return echelonize(m, false).size();
}

std::vector<RMatrix> nullspace_oracle(const RMatrix& a) {
  RMatrix m = a;
  std::vector<std::size_t> pivots = echelonize(m, true);
  std::vector<bool> is_pivot(a.cols() + 1, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RMatrix> basis;
  for (std::size_t f = 1; f <= a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[f - 1] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r] - 1] = -m.at(r + 1, f);
    }
    BigInt scale = 1;
    for (const auto& x : v) scale = boost::multiprecision::lcm(scale, x.den());
    if (scale != 1) {
      Rational s{std::move(scale)};
      for (auto& x : v) x *= s;
    }
    basis.push_back(RMatrix::column(v));
  }
  return basis;
}

bool span_equal(const std::vector<RMatrix>& u, const std::vector<RMatrix>& v) {
  for (const auto& x : u)
    if (x.cols() != 1) throw DimensionError("span_equal expects column vectors");
  for (const auto& x : v)
    if (x.cols() != 1) throw DimensionError("span_equal expects column vectors");
  if (u.empty() && v.empty()) return true;
  std::size_t height = u.empty() ? v.front().rows() : u.front().rows();
  for (const auto& x : u)
    if (x.rows() != height) throw DimensionError("span_equal with mixed vector heights");
  for (const auto& x : v)
    if (x.rows() != height) throw DimensionError("span_equal with mixed vector heights");

  RMatrix mu = hcat(u);
  RMatrix mv = hcat(v);
  std::vector<RMatrix> both;
  both.reserve(u.size() + v.size());
  both.insert(both.end(), u.begin(), u.end());
  both.insert(both.end(), v.begin(), v.end());
  RMatrix stacked = hcat(both);
  std::size_t ru = u.empty() ? 0 : rank_of(mu);
  std::size_t rv = v.empty() ? 0 : rank_of(mv);
  std::size_t rs = both.empty() ? 0 : rank_of(stacked);
  return ru == rv && rv == rs;
}

}  // namespace cmc
