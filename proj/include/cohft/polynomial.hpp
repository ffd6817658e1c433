#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cohft/rational.hpp"

namespace cohft {

// Monomial in the fixed variable set (t1, t2, q).
struct Mono {
  std::array<int, 3> e{0, 0, 0};

  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  // Lex order with t1 > t2 > q; larger monomial first in a polynomial.
  friend bool operator<(const Mono& a, const Mono& b) { return a.e < b.e; }

  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 3; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  bool divides(const Mono& o) const {
    for (int i = 0; i < 3; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Mono dividedBy(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 3; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  bool isConstant() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  // "t1^a t2^b q^c" with zero-exponent factors omitted; "1" for the constant.
  std::string str() const;
  static Mono parse(const std::string& s);
  static const char* varName(int i);
};

// Sparse multivariate polynomial over Q in (t1, t2, q).
// Terms are kept sorted with the largest monomial first; no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Mono m;
    Rational c;
  };

  Polynomial() = default;
  explicit Polynomial(const Rational& c) {
    if (!c.isZero()) terms_.push_back({Mono{}, c});
  }
  static Polynomial variable(int var, int power = 1);
  static Polynomial term(const Mono& m, const Rational& c) {
    Polynomial p;
    if (!c.isZero()) p.terms_.push_back({m, c});
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.isConstant());
  }
  const Term& leading() const;
  int degree(int var) const;
  int totalDegree() const;

  Rational coeffOf(const Mono& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  // Total order used for canonical sorting of polynomials.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Rational evaluate(const std::array<Rational, 3>& vals) const;

  // Exact division; throws NonDivisible if the divisor does not divide.
  Polynomial divExact(const Polynomial& d) const;

  // Monic normalization: scale so the leading coefficient is 1.
  Polynomial monic() const;

  // View as a univariate polynomial in `var` with polynomial coefficients;
  // index = power of var. Inverse of fromUnivariate.
  std::vector<Polynomial> toUnivariate(int var) const;
  static Polynomial fromUnivariate(int var, const std::vector<Polynomial>& coeffs);

  std::string str() const;
  std::size_t hash() const;

  static void normalize(std::vector<Term>& t);

 private:
  std::vector<Term> terms_;
};

// Monic gcd over Q[t1,t2,q] (primitive PRS).
Polynomial polyGcd(const Polynomial& a, const Polynomial& b);

}  // namespace cohft
