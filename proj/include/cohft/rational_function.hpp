#pragma once

#include "cohft/polynomial.hpp"

namespace cohft {

// Element of Q(t1,t2,q) in reduced canonical form: gcd(num, den) = 1 and the
// denominator is monic in the fixed monomial order. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Polynomial& num) : num_(num), den_(Rational(1)) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_ == Polynomial(Rational(1)); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const;

  // Canonical forms make structural equality valid; crossEquals decides
  // equality by cross-multiplication without relying on reduction.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }
  bool crossEquals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }

  Rational evaluate(const std::array<Rational, 3>& vals) const;

  std::string str() const;

 private:
  void reduce();

  Polynomial num_;
  Polynomial den_;
};

struct RationalFunctionRing {
  using Elem = RationalFunction;
  Elem zero() const { return RationalFunction(); }
  Elem one() const { return RationalFunction(Rational(1)); }
  Elem embed(const Rational& q) const { return RationalFunction(q); }
  bool isZero(const Elem& x) const { return x.isZero(); }
  std::string key() const { return "Q(t1,t2,q)"; }
};

}  // namespace cohft
