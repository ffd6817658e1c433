#include "cohft/rational_function.hpp"

namespace cohft {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw DivisionByZero();
  reduce();
}

void RationalFunction::reduce() {
  if (num_.isZero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = polyGcd(num_, den_);
  if (!g.isConstant()) {
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
  }
  Rational lead = den_.leading().c;
  if (lead != Rational(1)) {
    Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero() || b.isZero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (isZero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

Rational RationalFunction::evaluate(const std::array<Rational, 3>& vals) const {
  Rational d = den_.evaluate(vals);
  if (d.isZero()) throw DivisionByZero();
  return num_.evaluate(vals) / d;
}

std::string RationalFunction::str() const {
  if (isPolynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace cohft
