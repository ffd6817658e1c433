#pragma once

#include <string>

#include "cohft/rational.hpp"
#include "cohft/trunc_series.hpp"

namespace cohft {

// Ring contexts give the generic engine a uniform way to build constants in
// coefficient rings whose elements carry runtime parameters (variable tag,
// truncation order).

struct RationalRing {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem embed(const Rational& q) const { return q; }
  bool isZero(const Elem& x) const { return x.isZero(); }
  std::string key() const { return "Q"; }
};

// Q[t] / (t^{order+1})
struct TruncSeriesRing {
  std::string tag = "t";
  int order = 0;

  using Elem = TruncSeries;
  Elem zero() const { return TruncSeries(tag, order); }
  Elem one() const { return TruncSeries::constant(tag, order, Rational(1)); }
  Elem embed(const Rational& q) const { return TruncSeries::constant(tag, order, q); }
  bool isZero(const Elem& x) const { return x.isZero(); }
  std::string key() const { return "Q[" + tag + "]/" + std::to_string(order); }
};

}  // namespace cohft
