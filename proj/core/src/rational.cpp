#include "cmc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cmc/errors.hpp"
#include "cmc/opcount.hpp"

namespace cmc {

namespace {

using boost::multiprecision::gcd;

void count_add() { ++opcount::counters().additions; }
void count_mul() { ++opcount::counters().multiplications; }

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_ < 0) r.num_ = -r.num_;
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  count_add();
  if (den_ == 1 && o.den_ == 1) {
    num_ += o.num_;
    return *this;
  }
  // Knuth 4.5.1: with g = gcd(b, d) the only reduction needed afterwards
  // is by gcd(t, g).
  BigInt g = gcd(den_, o.den_);
  BigInt od_g = o.den_ / g;
  BigInt t = num_ * od_g + o.num_ * (den_ / g);
  BigInt d = den_ * od_g;
  if (t == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  BigInt g2 = gcd(t, g);
  num_ = t / g2;
  den_ = d / g2;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  count_mul();
  if (den_ == 1 && o.den_ == 1) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-reduce before multiplying so the products are as small as the
  // canonical result.
  BigInt g1 = gcd(num_, o.den_);
  BigInt g2 = gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  if (num_ == 0) den_ = 1;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  count_mul();
  BigInt g1 = gcd(num_, o.num_);
  BigInt g2 = gcd(o.den_, den_);
  BigInt n = (num_ / g1) * (o.den_ / g2);
  BigInt d = (den_ / g2) * (o.num_ / g1);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  if (num_ == 0) den_ = 1;
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(long long e) const {
  using boost::multiprecision::pow;
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                                : static_cast<unsigned long long>(e);
  if (invert && num_ == 0) throw std::domain_error("zero to a negative power");
  BigInt n = pow(num_, static_cast<unsigned>(k));
  BigInt d = pow(den_, static_cast<unsigned>(k));
  // A canonical base stays canonical under entrywise powers, up to sign.
  Rational r;
  if (invert) {
    if (n < 0) {
      n = -n;
      d = -d;
    }
    std::swap(n, d);
    if (d < 0) {
      n = -n;
      d = -d;
    }
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  if (r.den_ < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  if (body.empty()) throw ParseError("empty rational literal");

  auto take_digits = [](std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };

  std::size_t pos = 0;
  bool negative = false;
  if (body[pos] == '+' || body[pos] == '-') {
    negative = body[pos] == '-';
    ++pos;
  }
  std::string_view ns = take_digits(body, pos);
  if (ns.empty()) throw ParseError("malformed rational literal: \"" + std::string(body) + "\"");
  BigInt n{std::string(ns)};
  BigInt d = 1;
  if (pos < body.size()) {
    if (body[pos] != '/') {
      throw ParseError("malformed rational literal: \"" + std::string(body) + "\"");
    }
    ++pos;
    std::string_view ds = take_digits(body, pos);
    if (ds.empty() || pos != body.size()) {
      throw ParseError("malformed rational literal: \"" + std::string(body) + "\"");
    }
    d = BigInt{std::string(ds)};
    if (d == 0) throw ParseError("rational literal with zero denominator");
  }
  if (negative) n = -n;
  return Rational(std::move(n), std::move(d));
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  using boost::multiprecision::sqrt;
  if (r.sign() < 0) return std::nullopt;
  BigInt sn = sqrt(r.num());
  if (sn * sn != r.num()) return std::nullopt;
  BigInt sd = sqrt(r.den());
  if (sd * sd != r.den()) return std::nullopt;
  return Rational(std::move(sn), std::move(sd));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cmc
