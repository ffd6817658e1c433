#pragma once

#include <vector>

#include "cohft/errors.hpp"

namespace cohft {

// Bivariate truncated series sum_{k+l <= N} c[k][l] z^k w^l over a ring.
template <typename Ring>
class BivariateSeries {
 public:
  using Elem = typename Ring::Elem;

  BivariateSeries(const Ring& ring, int order) : ring_(ring), order_(order) {
    c_.assign(order + 1, std::vector<Elem>());
    for (int k = 0; k <= order; ++k) c_[k].assign(order + 1 - k, ring.zero());
  }

  int order() const { return order_; }
  const Elem& coeff(int k, int l) const { return c_.at(k).at(l); }
  void setCoeff(int k, int l, const Elem& v) { c_.at(k).at(l) = v; }

  // Exact division by (z + w). Checks that the numerator vanishes under the
  // substitution w := -z through the truncation order; throws NonDivisible
  // otherwise. Returns Q with (z+w) Q = *this, truncated at order-1.
  BivariateSeries divideByZPlusW() const {
    // Substitution check: sum_{i+j=s} (-1)^i c[i][j] = 0 for every s <= N.
    for (int s = 0; s <= order_; ++s) {
      Elem acc = ring_.zero();
      for (int i = 0; i <= s; ++i) {
        const Elem& t = c_[i][s - i];
        if (i % 2 == 0)
          acc += t;
        else
          acc -= t;
      }
      if (!ring_.isZero(acc))
        throw NonDivisible("bivariate numerator does not vanish on z = -w (degree " +
                           std::to_string(s) + ")");
    }
    if (order_ == 0) return BivariateSeries(ring_, 0);
    BivariateSeries q(ring_, order_ - 1);
    // c[k][l] = q[k-1][l] + q[k][l-1]  =>  q[k][l] = c[k+1][l] - q[k+1][l-1]
    for (int l = 0; l <= order_ - 1; ++l) {
      for (int k = order_ - 1 - l; k >= 0; --k) {
        Elem v = c_[k + 1][l];
        if (l > 0) v -= q.coeff(k + 1, l - 1);
        q.setCoeff(k, l, v);
      }
    }
    return q;
  }

 private:
  Ring ring_;
  int order_;
  std::vector<std::vector<Elem>> c_;
};

}  // namespace cohft
