#include "cohft/verlinde.hpp"

#include <map>
#include <mutex>

namespace cohft {

int sl2Fusion(int level, int a, int b, int c) {
  if (level < 1) throw RangeError("level must be >= 1");
  if (a < 0 || a > level || b < 0 || b > level || c < 0 || c > level)
    throw RangeError("weight out of range for level");
  if ((a + b + c) % 2 != 0) return 0;
  if (c < std::abs(a - b)) return 0;
  if (c > std::min(a + b, 2 * level - a - b)) return 0;
  return 1;
}

Rational verlindeAnomaly(int level) { return Rational(3 * level, level + 2); }

Rational verlindeWeight(int level, int a) {
  return Rational(static_cast<long>(a) * (a + 2), 4 * (level + 2));
}

FrobeniusData verlindeFrobenius(int level) {
  int d = level + 1;
  RationalRing ring;
  RatMat eta = RatMat::identity(ring, d);  // mu* = mu for sl2
  std::vector<Rational> tp(d * d * d, Rational(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        tp[(a * d + b) * d + c] = Rational(sl2Fusion(level, a, b, c));
  return FrobeniusData(std::move(eta), std::move(tp), 0);
}

long verlindeRank(int level, int g, const std::vector<int>& weights) {
  static std::map<int, FrobeniusData> frobs;
  static std::mutex mu;
  const FrobeniusData* f;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = frobs.find(level);
    if (it == frobs.end()) it = frobs.emplace(level, verlindeFrobenius(level)).first;
    f = &it->second;
  }
  Rational v = f->topologicalCorrelator(g, weights);
  if (!v.isInteger()) throw Error("verlinde rank is not an integer");
  return v.toLong();
}

RMatrix<TruncSeriesRing> verlindeRMatrix(int level, int order, int tOrder) {
  TruncSeriesRing ring{"t", tOrder};
  int d = level + 1;
  RMatrix<TruncSeriesRing> out;
  out.coeff.assign(order + 1, Mat<TruncSeriesRing>(ring, d, d));
  for (int a = 0; a < d; ++a) {
    // exp(t z x_a) with x_a = -w(a) + c/24: coefficient of z^k is t^k x_a^k / k!.
    Rational x = verlindeAnomaly(level) / Rational(24) - verlindeWeight(level, a);
    Rational pw(1);
    for (int k = 0; k <= order; ++k) {
      if (k > 0) pw *= x / Rational(k);
      TruncSeries c(ring.tag, tOrder);
      if (k <= tOrder) c.setCoeff(k, pw);
      out.coeff[k](a, a) = std::move(c);
    }
  }
  return out;
}

std::shared_ptr<Theory<TruncSeriesRing>> verlindeTheory(int level, int order, int tOrder) {
  static std::map<std::tuple<int, int, int>, std::shared_ptr<Theory<TruncSeriesRing>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(level, order, tOrder);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto th = std::make_shared<Theory<TruncSeriesRing>>(TruncSeriesRing{"t", tOrder},
                                                        verlindeFrobenius(level),
                                                        verlindeRMatrix(level, order, tOrder));
    it = cache.emplace(key, std::move(th)).first;
  }
  return it->second;
}

TruncSeries verlindeCorrelator(int level, int g, const std::vector<int>& weights,
                               const std::vector<int>& psi, int tOrder) {
  int n = static_cast<int>(weights.size());
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  if (!psi.empty() && psi.size() != weights.size())
    throw SizeMismatch("psi exponent count != n");
  for (int w : weights)
    if (w < 0 || w > level) throw RangeError("weight out of range for level");

  auto th = verlindeTheory(level, 3 * g - 3 + n, tOrder);
  std::vector<Insertion> ins(n);
  for (int i = 0; i < n; ++i) {
    ins[i].vec.assign(level + 1, Rational(0));
    ins[i].vec[weights[i]] = Rational(1);
    ins[i].psi = psi.empty() ? 0 : psi[i];
  }
  return reconstructCorrelator(*th, g, ins);
}

bool level1EvenRankCheck(int g, int n) {
  if (n % 2 != 0) throw ValidationError("even insertion count required");
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  // Degree-0 part of the even-graph formula: only the edgeless graph
  // contributes (strata push degree up by the edge count), giving
  // 2^{g - h^1} = 2^g there.
  long formula = 1L << g;
  std::vector<int> weights(n, 1);
  return verlindeRank(1, g, weights) == formula;
}

}  // namespace cohft
