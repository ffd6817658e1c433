#pragma once

#include <string>
#include <vector>

#include "cohft/rational.hpp"

namespace cohft {

// Dense univariate power series over Q, truncated at a fixed order.
// The variable tag and truncation order are part of the value; combining
// series with different tags or orders throws instead of silently
// truncating to the minimum.
class TruncSeries {
 public:
  TruncSeries() : tag_("z"), order_(0), c_(1) {}
  TruncSeries(std::string tag, int order)
      : tag_(std::move(tag)), order_(order), c_(order + 1) {
    if (order < 0) throw RangeError("negative truncation order");
  }
  static TruncSeries constant(std::string tag, int order, const Rational& value) {
    TruncSeries s(std::move(tag), order);
    s.c_[0] = value;
    return s;
  }
  static TruncSeries variable(std::string tag, int order) {
    TruncSeries s(std::move(tag), order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
  }

  const std::string& tag() const { return tag_; }
  int order() const { return order_; }
  const Rational& coeff(int k) const { return c_.at(k); }
  void setCoeff(int k, const Rational& v) { c_.at(k) = v; }

  bool isZero() const {
    for (const auto& x : c_)
      if (!x.isZero()) return false;
    return true;
  }

  TruncSeries operator-() const {
    TruncSeries r(tag_, order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
  }
  TruncSeries& operator+=(const TruncSeries& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    TruncSeries r(a.tag_, a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.c_[i].isZero()) continue;
      for (int j = 0; i + j <= a.order_; ++j) {
        if (b.c_[j].isZero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  // Multiplicative inverse; requires an invertible constant term.
  TruncSeries inverse() const {
    if (c_[0].isZero()) throw DivisionByZero();
    TruncSeries r(tag_, order_);
    Rational inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
      Rational acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * inv0;
    }
    return r;
  }

  // exp of a series with zero constant term.
  TruncSeries expSeries() const {
    if (!c_[0].isZero()) throw RangeError("exp requires zero constant term");
    TruncSeries r = constant(tag_, order_, Rational(1));
    TruncSeries pow = r;
    Rational fact(1);
    for (int k = 1; k <= order_; ++k) {
      pow *= *this;
      fact *= Rational(k);
      if (pow.isZero()) break;
      TruncSeries term = pow;
      for (int i = 0; i <= order_; ++i) term.c_[i] = term.c_[i] / fact;
      r += term;
    }
    return r;
  }

 private:
  void check(const TruncSeries& o) const {
    if (tag_ != o.tag_)
      throw Error("series variable mismatch: " + tag_ + " vs " + o.tag_);
    if (order_ != o.order_)
      throw Error("series truncation order mismatch: " + std::to_string(order_) +
                  " vs " + std::to_string(o.order_));
  }

  std::string tag_;
  int order_;
  std::vector<Rational> c_;
};

}  // namespace cohft
