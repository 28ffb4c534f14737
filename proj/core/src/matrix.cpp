#include "cmc/matrix.hpp"

#include <ostream>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

namespace {

std::string shape(const RMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix a(n, n);
  for (std::size_t i = 1; i <= n; ++i) a.at(i, i) = Rational(1);
  return a;
}

RMatrix RMatrix::diagonal(const std::vector<Rational>& entries) {
  RMatrix a(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) a.at(i + 1, i + 1) = entries[i];
  return a;
}

RMatrix RMatrix::column(const std::vector<Rational>& entries) {
  RMatrix a(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) a.at(i + 1, 1) = entries[i];
  return a;
}

std::size_t RMatrix::order() const {
  if (!is_square()) throw DimensionError("order of a " + shape(*this) + " matrix");
  return rows_;
}

void RMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw DimensionError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") outside a " + shape(*this) + " matrix");
  }
}

const Rational& RMatrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return data_[pos(i, j)];
}

Rational& RMatrix::at(std::size_t i, std::size_t j) {
  check_index(i, j);
  return data_[pos(i, j)];
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RMatrix RMatrix::scaled(const Rational& c) const {
  RMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool RMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Rational> RMatrix::row_vec(std::size_t i) const {
  std::vector<Rational> r;
  r.reserve(cols_);
  for (std::size_t j = 1; j <= cols_; ++j) r.push_back(at(i, j));
  return r;
}

std::vector<Rational> RMatrix::col_vec(std::size_t j) const {
  std::vector<Rational> c;
  c.reserve(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) c.push_back(at(i, j));
  return c;
}

RMatrix RMatrix::column_matrix(std::size_t j) const { return RMatrix::column(col_vec(j)); }

RMatrix RMatrix::operator-() const {
  RMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

RMatrix RMatrix::operator+(const RMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("sum of " + shape(*this) + " and " + shape(o) + " matrices");
  }
  RMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

RMatrix RMatrix::operator-(const RMatrix& o) const { return *this + (-o); }

RMatrix RMatrix::operator*(const RMatrix& o) const {
  if (cols_ != o.rows_) {
    throw DimensionError("product of " + shape(*this) + " and " + shape(o) + " matrices");
  }
  RMatrix r(rows_, o.cols_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t k = 1; k <= cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 1; j <= o.cols_; ++j) {
        const Rational& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

RMatrix hcat(const std::vector<RMatrix>& parts) {
  if (parts.empty()) return RMatrix();
  std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw DimensionError("hcat with mismatched row counts");
    cols += p.cols();
  }
  RMatrix r(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 1; i <= rows; ++i)
      for (std::size_t j = 1; j <= p.cols(); ++j) r.at(i, off + j) = p.at(i, j);
    off += p.cols();
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const RMatrix& a) {
  os << '[';
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    if (i > 1) os << "; ";
    os << '[';
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (j > 1) os << ", ";
      os << a.at(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace cmc
