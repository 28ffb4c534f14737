#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cmc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. The canonical form is maintained after every
// operation: the denominator is positive, gcd(|num|, den) == 1, and zero
// is stored as 0/1. Arithmetic feeds the opcount tallies: + and - count
// as additions, * and / as multiplications.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);  // normalizes; zero d throws std::domain_error
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // zero divisor throws std::domain_error

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  // Integer exponent; a negative exponent inverts (zero base then throws
  // std::domain_error).
  Rational pow(long long e) const;

  // Canonical text form "p" or "p/q" with q > 1, e.g. "3", "-7/2", "0".
  std::string str() const;

  // Parses the text form: optional sign, digits, optional "/digits" with a
  // positive denominator. Surrounding whitespace is accepted. Throws
  // ParseError on anything else.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

// Exact square root when it exists in the rationals (r must be canonical,
// which Rational guarantees). Returns the nonnegative root.
std::optional<Rational> exact_sqrt(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cmc
