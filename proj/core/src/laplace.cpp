#include "cmc/laplace.hpp"

#include <charconv>
#include <string>

#include "cmc/compound.hpp"
#include "cmc/errors.hpp"
#include "cmc/oracles.hpp"

namespace cmc {

namespace {

std::size_t checked_order(const RMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw DimensionError(std::string(what) + " requires a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return a.order();
}

void check_row(std::size_t row, std::size_t n, const char* what) {
  if (row < 1 || row > n) {
    throw RankError(std::string(what) + ": row " + std::to_string(row) + " outside 1.." +
                    std::to_string(n));
  }
}

Rational det_expand_first_row(const RMatrix& a) {
  std::size_t n = a.order();
  if (n == 0) return Rational(1);
  if (n == 1) return a.at(1, 1);
  Rational acc(0);
  for (std::size_t j = 1; j <= n; ++j) {
    const Rational& pivot = a.at(1, j);
    if (pivot.is_zero()) continue;
    RMatrix sub(n - 1, n - 1);
    for (std::size_t i = 2; i <= n; ++i) {
      std::size_t cc = 1;
      for (std::size_t c = 1; c <= n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = a.at(i, c);
      }
    }
    Rational term = pivot * det_expand_first_row(sub);
    if (j % 2 == 0) term = -term;
    acc += term;
  }
  return acc;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || value == 0) {
      throw ParseError("malformed index list: \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty index list");
  return out;
}

}  // namespace

DetStrategy parse_det_strategy(std::string_view text, std::size_t n) {
  std::string_view head = text;
  std::string_view args;
  if (std::size_t colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  if (head == "bareiss") {
    if (!args.empty()) throw ParseError("bareiss takes no arguments");
    return Bareiss{};
  }
  if (head == "permutation") {
    if (!args.empty()) throw ParseError("permutation takes no arguments");
    return Permutation{};
  }
  if (head == "cofactor") {
    std::size_t row = 1;
    if (!args.empty()) {
      auto idx = parse_index_list(args);
      if (idx.size() != 1) throw ParseError("cofactor takes a single row index");
      row = idx[0];
    }
    check_row(row, n, "cofactor");
    return Cofactor{row};
  }
  if (head == "pair-rows") {
    std::size_t r1 = 1;
    std::size_t r2 = 2;
    if (!args.empty()) {
      auto idx = parse_index_list(args);
      if (idx.size() != 2) throw ParseError("pair-rows takes two row indices");
      r1 = idx[0];
      r2 = idx[1];
    }
    if (r1 >= r2) throw RankError("pair-rows needs two increasing row indices");
    check_row(r2, n, "pair-rows");
    return PairRows{r1, r2};
  }
  if (head == "general-rows") {
    if (args.empty()) throw ParseError("general-rows needs a row subset, e.g. general-rows:1,2,3");
    auto idx = parse_index_list(args);
    std::vector<unsigned> rows(idx.begin(), idx.end());
    return GeneralRows{Combo(static_cast<unsigned>(n), std::move(rows))};
  }
  throw ParseError("unknown determinant strategy: \"" + std::string(text) + "\"");
}

std::string strategy_name(const DetStrategy& s) {
  struct Namer {
    std::string operator()(const Cofactor& c) const {
      return "cofactor:" + std::to_string(c.row);
    }
    std::string operator()(const PairRows& p) const {
      return "pair-rows:" + std::to_string(p.r1) + "," + std::to_string(p.r2);
    }
    std::string operator()(const GeneralRows& g) const {
      std::string s = "general-rows:";
      const auto& idx = g.rows.indices();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
      }
      return s;
    }
    std::string operator()(const Bareiss&) const { return "bareiss"; }
    std::string operator()(const Permutation&) const { return "permutation"; }
  };
  return std::visit(Namer{}, s);
}

Rational det_with(const RMatrix& a, const DetStrategy& s) {
  struct Runner {
    const RMatrix& a;
    Rational operator()(const Cofactor& c) const { return det_cofactor(a, c.row); }
    Rational operator()(const PairRows& p) const { return det_laplace_pair(a, p.r1, p.r2); }
    Rational operator()(const GeneralRows& g) const { return det_laplace_general(a, g.rows); }
    Rational operator()(const Bareiss&) const { return det_bareiss(a); }
    Rational operator()(const Permutation&) const { return det_permutation(a); }
  };
  return std::visit(Runner{a}, s);
}

Rational det_cofactor(const RMatrix& a, std::size_t row) {
  std::size_t n = checked_order(a, "cofactor expansion");
  if (n == 0) return Rational(1);
  check_row(row, n, "cofactor expansion");
  if (n == 1) return a.at(1, 1);
  Rational acc(0);
  for (std::size_t j = 1; j <= n; ++j) {
    const Rational& pivot = a.at(row, j);
    if (pivot.is_zero()) continue;
    RMatrix sub(n - 1, n - 1);
    std::size_t rr = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == row) continue;
      std::size_t cc = 1;
      for (std::size_t c = 1; c <= n; ++c) {
        if (c == j) continue;
        sub.at(rr, cc++) = a.at(i, c);
      }
      ++rr;
    }
    Rational term = pivot * det_expand_first_row(sub);
    if ((row + j) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

RMatrix adjugate(const RMatrix& a) {
  std::size_t n = checked_order(a, "adjugate");
  if (n < 2) throw DimensionError("adjugate defined for order >= 2");
  unsigned un = static_cast<unsigned>(n);
  RMatrix adj(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      // Entry (i, j) is the cofactor of a at (j, i).
      Combo rows(un, {static_cast<unsigned>(j)});
      Combo cols(un, {static_cast<unsigned>(i)});
      Rational m = minor_det(a, rows.complement(), cols.complement());
      if ((i + j) % 2 == 1) m = -m;
      adj.at(i, j) = std::move(m);
    }
  }
  return adj;
}

Rational det_laplace_pair(const RMatrix& a, std::size_t i1, std::size_t i2) {
  std::size_t n = checked_order(a, "two-row expansion");
  if (n < 2) throw DimensionError("two-row expansion needs order >= 2");
  if (i1 >= i2) throw RankError("two-row expansion needs increasing row indices");
  check_row(i2, n, "two-row expansion");
  unsigned un = static_cast<unsigned>(n);
  Combo row_set(un, {static_cast<unsigned>(i1), static_cast<unsigned>(i2)});
  Combo row_rest = row_set.complement();

  Rational acc(0);
  for (std::size_t j1 = 1; j1 < n; ++j1) {
    for (std::size_t j2 = j1 + 1; j2 <= n; ++j2) {
      Combo col_set(un, {static_cast<unsigned>(j1), static_cast<unsigned>(j2)});
      Rational term = minor_det(a, row_set, col_set) * minor_det(a, row_rest, col_set.complement());
      if ((i1 + i2 + j1 + j2) % 2 == 1) term = -term;
      acc += term;
    }
  }
  return acc;
}

Rational det_laplace_general(const RMatrix& a, const Combo& rows) {
  std::size_t n = checked_order(a, "fixed-rows expansion");
  if (rows.ambient() != n) {
    throw DimensionError("row subset drawn from a different order");
  }
  std::size_t p = rows.size();
  if (p < 1 || p > n) throw RankError("fixed-rows expansion needs 1 <= p <= n rows");
  Combo row_rest = rows.complement();
  unsigned row_sum = rows.index_sum();

  Rational acc(0);
  std::uint64_t count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(p));
  for (std::uint64_t r = 1; r <= count; ++r) {
    Combo cols = Combo::subset_at(static_cast<unsigned>(n), static_cast<unsigned>(p), r);
    Rational term = minor_det(a, rows, cols) * minor_det(a, row_rest, cols.complement());
    if ((row_sum + cols.index_sum()) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace cmc
