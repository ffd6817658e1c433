#include "cohft/frobenius.hpp"

#include <algorithm>

#include "cohft/rmatrix.hpp"

namespace cohft {

RMatrix<RationalRing> hodgeRMatrix(int order) {
  if (order < 0) throw RangeError("negative truncation order");
  TruncSeries expo("z", order);
  for (int k = 1; 2 * k - 1 <= order; ++k)
    expo.setCoeff(2 * k - 1, -bernoulli(2 * k) / Rational(2 * k * (2 * k - 1)));
  TruncSeries series = expo.expSeries();
  RationalRing ring;
  RMatrix<RationalRing> r;
  r.coeff.assign(order + 1, Mat<RationalRing>(ring, 1, 1));
  for (int k = 0; k <= order; ++k) r.coeff[k](0, 0) = series.coeff(k);
  return r;
}

FrobeniusData::FrobeniusData(RatMat eta, std::vector<Rational> threePoint, int unitIndex)
    : eta_(std::move(eta)), tp_(std::move(threePoint)), unit_(unitIndex),
      cache_(std::make_shared<Cache>()) {
  int d = eta_.rows;
  if (eta_.cols != d) throw ValidationError("eta must be square");
  if (static_cast<int>(tp_.size()) != d * d * d)
    throw ValidationError("threePoint tensor has wrong size");
  if (unit_ < 0 || unit_ >= d) throw ValidationError("unit index out of range");
  etaInv_ = matInverse(RationalRing{}, eta_);

  // e_a * e_b = sum_c ( sum_k tp(a,b,k) eta^{kc} ) e_c
  structure_.assign(d * d * d, Rational(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Rational acc(0);
        for (int k = 0; k < d; ++k) acc += this->threePoint(a, b, k) * etaInv_(k, c);
        structure_[(a * d + b) * d + c] = acc;
      }
  handle_.assign(d, Rational(0));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      if (etaInv_(j, k).isZero()) continue;
      for (int c = 0; c < d; ++c)
        handle_[c] += etaInv_(j, k) * structure_[(j * d + k) * d + c];
    }
  validate();
}

void FrobeniusData::validate() const {
  int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (eta_(i, j) != eta_(j, i)) throw ValidationError("eta is not symmetric");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Rational& v = threePoint(i, j, k);
        if (v != threePoint(j, i, k) || v != threePoint(i, k, j))
          throw ValidationError("threePoint tensor is not symmetric");
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (threePoint(i, j, unit_) != eta_(i, j))
        throw ValidationError("unit axiom Omega_{0,3}(v1,v2,1) = eta(v1,v2) fails");
  // Associativity via structure constants.
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        std::vector<Rational> ab(d), bc(d);
        for (int x = 0; x < d; ++x) {
          ab[x] = structure_[(a * d + b) * d + x];
          bc[x] = structure_[(b * d + c) * d + x];
        }
        std::vector<Rational> left(d, Rational(0)), right(d, Rational(0));
        for (int x = 0; x < d; ++x) {
          for (int y = 0; y < d; ++y) {
            left[y] += ab[x] * structure_[(x * d + c) * d + y];
            right[y] += bc[x] * structure_[(a * d + x) * d + y];
          }
        }
        if (left != right) throw ValidationError("quantum product is not associative");
      }
}

std::vector<Rational> FrobeniusData::quantumProduct(const std::vector<Rational>& u,
                                                    const std::vector<Rational>& v) const {
  int d = dim();
  std::vector<Rational> out(d, Rational(0));
  for (int a = 0; a < d; ++a) {
    if (u[a].isZero()) continue;
    for (int b = 0; b < d; ++b) {
      if (v[b].isZero()) continue;
      Rational f = u[a] * v[b];
      for (int c = 0; c < d; ++c) out[c] += f * structure_[(a * d + b) * d + c];
    }
  }
  return out;
}

std::vector<Rational> FrobeniusData::unitVector() const {
  std::vector<Rational> u(dim(), Rational(0));
  u[unit_] = Rational(1);
  return u;
}

Rational FrobeniusData::counit(const std::vector<Rational>& w) const {
  Rational acc(0);
  for (int i = 0; i < dim(); ++i) acc += w[i] * eta_(i, unit_);
  return acc;
}

Rational FrobeniusData::topologicalCorrelator(int g, const std::vector<int>& indices) const {
  int n = static_cast<int>(indices.size());
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  std::vector<int> key = indices;
  std::sort(key.begin(), key.end());
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->topo.find({g, key});
    if (it != cache_->topo.end()) return it->second;
  }

  // Caterpillar gluing: fold the insertions into a running product and close
  // g handles, then pair with the unit.
  std::vector<Rational> w = unitVector();
  for (int idx : key) {
    std::vector<Rational> e(dim(), Rational(0));
    e[idx] = Rational(1);
    w = quantumProduct(w, e);
  }
  for (int h = 0; h < g; ++h) w = quantumProduct(w, handle_);
  Rational value = counit(w);

  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->topo.emplace(std::make_pair(g, std::move(key)), value);
  return value;
}

}  // namespace cohft
