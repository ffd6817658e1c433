#include "cohft/rspin.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace cohft {

long sl2InvariantDim(const std::vector<int>& weights) {
  for (int b : weights)
    if (b < 0) throw RangeError("negative sl2 weight");
  // mult[w] = multiplicity of rho_w in the running tensor product.
  std::vector<long> mult{1};  // rho_0
  for (int b : weights) {
    std::size_t maxW = mult.size() - 1 + b;
    std::vector<long> next(maxW + 1, 0);
    for (std::size_t w = 0; w < mult.size(); ++w) {
      if (mult[w] == 0) continue;
      for (int c = std::abs(static_cast<int>(w) - b); c <= static_cast<int>(w) + b; c += 2)
        next[c] += mult[w];
    }
    mult = std::move(next);
  }
  return mult.empty() ? 0 : mult[0];
}

int fusionCoefficient(int r, int a, int b, int c) {
  if (r < 2) throw RangeError("r must be >= 2");
  if (a < 0 || a > r - 2 || b < 0 || b > r - 2 || c < 0 || c > r - 2)
    throw RangeError("fusion weight out of range");
  if (a + b + c > 2 * r - 4) return 0;
  return static_cast<int>(sl2InvariantDim({a, b, c}));
}

Rational rspinDegree(int r, int g, const std::vector<int>& a) {
  int sum = std::accumulate(a.begin(), a.end(), 0);
  return Rational((r - 2) * (g - 1) + sum, r);
}

FrobeniusData rspinFrobenius(int r) {
  int d = r - 1;
  RationalRing ring;
  RatMat eta(ring, d, d);
  for (int i = 0; i < d; ++i) eta(i, d - 1 - i) = Rational(1);
  std::vector<Rational> tp(d * d * d, Rational(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        tp[(a * d + b) * d + c] = Rational(fusionCoefficient(r, a, b, r - 2 - c));
  return FrobeniusData(std::move(eta), std::move(tp), 0);
}

Rational rspinTopologicalExact(int r, int g, const std::vector<int>& a) {
  static std::map<int, FrobeniusData> frobs;
  static std::mutex mu;
  const FrobeniusData* f;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = frobs.find(r);
    if (it == frobs.end()) it = frobs.emplace(r, rspinFrobenius(r)).first;
    f = &it->second;
  }
  return f->topologicalCorrelator(g, a);
}

double rspinTopologicalFloat(int r, int g, int n, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != n) throw SizeMismatch("weight count != n");
  const double pi = std::acos(-1.0);
  double total = 0.0;
  for (int k = 1; k <= r - 1; ++k) {
    double num = 1.0;
    for (int i = 0; i < n; ++i) num *= std::sin((a[i] + 1) * k * pi / r);
    double sign = ((k - 1) * (g - 1)) % 2 == 0 ? 1.0 : -1.0;
    total += sign * num / std::pow(std::sin(k * pi / r), 2 * g - 2 + n);
  }
  return std::pow(r / 2.0, g - 1) * total;
}

BSeries bSeries(int r, int a, int order) {
  if (a < 0 || a > r - 2) throw RangeError("B-series weight out of range");
  TruncSeries b("z", order);
  Rational term(1);
  b.setCoeff(0, term);
  for (int m = 1; m <= order; ++m) {
    long f1 = static_cast<long>(2 * m - 1) * r - 2 * (a + 1);
    long f2 = static_cast<long>(2 * m - 1) * r + 2 * (a + 1);
    term *= Rational(f1) * Rational(f2) / Rational(m);
    term *= Rational(-1, 16) / Rational(static_cast<long>(r) * r);
    b.setCoeff(m, term);
  }
  BSeries out{TruncSeries("z", order), TruncSeries("z", order)};
  for (int m = 0; m <= order; ++m)
    (m % 2 == 0 ? out.even : out.odd).setCoeff(m, b.coeff(m));
  return out;
}

RMatrix<RationalRing> rspinRMatrix(int r, int order) {
  int d = r - 1;
  RationalRing ring;
  RMatrix<RationalRing> out;
  out.coeff.assign(order + 1, Mat<RationalRing>(ring, d, d));
  for (int a = 0; a <= r - 2; ++a) {
    BSeries b = bSeries(r, a, order);
    for (int k = 0; k <= order; ++k) {
      out.coeff[k](a, a) += b.even.coeff(k);
      out.coeff[k](r - 2 - a, a) += b.odd.coeff(k);
    }
  }
  return out;
}

std::shared_ptr<Theory<RationalRing>> rspinTheory(int r, int order) {
  static std::map<std::pair<int, int>, std::shared_ptr<Theory<RationalRing>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({r, order});
  if (it == cache.end()) {
    auto th = std::make_shared<Theory<RationalRing>>(RationalRing{}, rspinFrobenius(r),
                                                     rspinRMatrix(r, order));
    it = cache.emplace(std::make_pair(r, order), std::move(th)).first;
  }
  return it->second;
}

Rational wittenIntegral(int r, int g, const std::vector<int>& a, const std::vector<int>& psi) {
  int n = static_cast<int>(a.size());
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  if (!psi.empty() && psi.size() != a.size()) throw SizeMismatch("psi exponent count != n");
  for (int x : a)
    if (x < 0 || x > r - 2) throw RangeError("weight out of range");

  Rational deg = rspinDegree(r, g, a);
  if (!deg.isInteger() || deg.sign() < 0) return Rational(0);
  long d = deg.toLong();
  long psiSum = psi.empty() ? 0 : std::accumulate(psi.begin(), psi.end(), 0L);
  if (d + psiSum != 3 * g - 3 + n) return Rational(0);

  auto th = rspinTheory(r, 3 * g - 3 + n);
  std::vector<Insertion> ins(n);
  for (int i = 0; i < n; ++i) {
    ins[i].vec.assign(r - 1, Rational(0));
    ins[i].vec[a[i]] = Rational(1);
    ins[i].psi = psi.empty() ? 0 : psi[i];
  }
  return reconstructCorrelator(*th, g, ins);
}

bool idempotentCheckFloat(int r, double tol) {
  const double pi = std::acos(-1.0);
  int d = r - 1;
  // v_k = sqrt(2/r) sum_a sin((a+1)k pi/r) e_a
  auto vcomp = [&](int k, int a) {
    return std::sqrt(2.0 / r) * std::sin((a + 1) * k * pi / r);
  };
  FrobeniusData f = rspinFrobenius(r);
  for (int k = 1; k <= r - 1; ++k)
    for (int l = 1; l <= r - 1; ++l) {
      // eta(v_k, v_l)
      double pairing = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          pairing += vcomp(k, a) * vcomp(l, b) * f.eta()(a, b).toDouble();
      double expected = (k == l) ? ((k - 1) % 2 == 0 ? 1.0 : -1.0) : 0.0;
      if (std::abs(pairing - expected) > tol) return false;

      // v_k * v_l via exact structure constants
      std::vector<double> prod(d, 0.0);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          double w = vcomp(k, a) * vcomp(l, b);
          if (w == 0.0) continue;
          std::vector<Rational> ea(d, Rational(0)), eb(d, Rational(0));
          ea[a] = Rational(1);
          eb[b] = Rational(1);
          auto pc = f.quantumProduct(ea, eb);
          for (int c = 0; c < d; ++c) prod[c] += w * pc[c].toDouble();
        }
      double scale = (k == l) ? std::sqrt(r / 2.0) / std::sin(k * pi / r) : 0.0;
      for (int c = 0; c < d; ++c) {
        double expect = scale * vcomp(k, c);
        if (std::abs(prod[c] - expect) > tol) return false;
      }
    }
  return true;
}

bool eulerCommutationCheck(int r, int order) {
  RationalRing ring;
  int d = r - 1;
  RMatrix<RationalRing> R = rspinRMatrix(r, order);
  Mat<RationalRing> xi(ring, d, d);
  for (int i = 0; i < d; ++i) xi(i, d - 1 - i) = Rational(2);
  Mat<RationalRing> mu(ring, d, d);
  for (int i = 0; i < d; ++i) mu(i, i) = Rational(-(r - 2) + 2 * i, 2 * r);
  for (int m = 0; m + 1 <= order; ++m) {
    // [R_{m+1}, xi] = R_m (m - mu); the degree operator multiplies on the
    // right under the column-vector convention R(e_mu) = sum_nu R^nu_mu e_nu.
    Mat<RationalRing> lhs = matSub(ring, matMul(ring, R.coeff[m + 1], xi),
                                   matMul(ring, xi, R.coeff[m + 1]));
    Mat<RationalRing> mMinusMu(ring, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        mMinusMu(i, j) = (i == j ? Rational(m) : Rational(0)) - mu(i, j);
    Mat<RationalRing> rhs = matMul(ring, R.coeff[m], mMinusMu);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace cohft
