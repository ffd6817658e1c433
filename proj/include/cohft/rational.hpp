#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cohft/errors.hpp"

namespace cohft {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin value wrapper over mpq_class so the rest of the code never touches
// GMP types directly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p/q" or "p" (arbitrary precision, optional leading '-').
  static Rational parse(const std::string& s);

  static Rational binomial(unsigned long n, unsigned long k);
  static Rational factorial(unsigned long n);

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const;

  bool isZero() const { return sgn(v_) == 0; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Only valid when the value fits; used for small combinatorial counts.
  long toLong() const;
  double toDouble() const { return v_.get_d(); }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  std::size_t hash() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Bernoulli number B_n (B_1 = -1/2 convention; only even indices are used here).
Rational bernoulli(int n);

}  // namespace cohft
