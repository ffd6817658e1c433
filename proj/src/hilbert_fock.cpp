#include "cohft/hilbert_fock.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace cohft {

namespace {

void checkPartition(const Partition& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && mu[i] > mu[i - 1]) throw ValidationError("partition must be weakly decreasing");
  }
}

int weight(const Partition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

int multiplicity(const Partition& mu, int part) {
  return static_cast<int>(std::count(mu.begin(), mu.end(), part));
}

Partition removePart(Partition mu, int part) {
  auto it = std::find(mu.begin(), mu.end(), part);
  mu.erase(it);
  return mu;
}

Partition addPart(Partition mu, int part) {
  mu.push_back(part);
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  return mu;
}

// c_k = ((-q)^k + 1) / ((-q)^k - 1)
RationalFunction ck(int k) {
  Rational sign(k % 2 == 0 ? 1 : -1);
  Polynomial qk = Polynomial::variable(2, k).scaled(sign);
  Polynomial one((Rational(1)));
  return RationalFunction(qk + one, qk - one);
}

Polynomial t1t2() { return Polynomial::variable(0) * Polynomial::variable(1); }
Polynomial t1PlusT2() { return Polynomial::variable(0) + Polynomial::variable(1); }

}  // namespace

Rational zFactor(const Partition& mu) {
  checkPartition(mu);
  Rational z(1);
  for (int p : mu) z *= Rational(p);
  int i = 0;
  while (i < static_cast<int>(mu.size())) {
    int j = i;
    while (j < static_cast<int>(mu.size()) && mu[j] == mu[i]) ++j;
    z *= Rational::factorial(j - i);
    i = j;
  }
  return z;
}

const std::vector<Partition>& partitionsOf(int m) {
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  std::sort(out.begin(), out.end(), std::greater<Partition>());
  return cache.emplace(m, std::move(out)).first->second;
}

RationalFunction fockInner(const Partition& mu, const Partition& nu) {
  checkPartition(mu);
  checkPartition(nu);
  if (weight(mu) != weight(nu)) throw SizeMismatch("partitions of different sizes");
  if (mu != nu) return RationalFunction();
  int ell = static_cast<int>(mu.size());
  Rational sign((weight(mu) - ell) % 2 == 0 ? 1 : -1);
  Polynomial den(Rational(1));
  for (int i = 0; i < ell; ++i) den *= t1t2();
  return RationalFunction(Polynomial(sign / zFactor(mu)), den);
}

FockVector mdApply(int m, const Partition& mu) {
  checkPartition(mu);
  if (weight(mu) != m) throw SizeMismatch("partition has wrong size");

  // Action on the unnormalized monomial a_mu = prod alpha_{-mu_i} |0>;
  // normalized coefficients are rescaled by z(nu)/z(mu) at the end.
  std::map<Partition, RationalFunction> acc;

  // Diagonal part: (t1+t2) [ sum_k (k^2 mult_k / 2) c_k - (m/2) c_1 ].
  {
    RationalFunction diag;
    std::vector<int> distinct = mu;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int k : distinct)
      diag += ck(k) * RationalFunction(Rational(static_cast<long>(k) * k * multiplicity(mu, k), 2));
    diag -= ck(1) * RationalFunction(Rational(m, 2));
    diag *= RationalFunction(t1PlusT2());
    if (!diag.isZero()) acc[mu] += diag;
  }

  // Splitting: -(1/2) sum_{k,l>0} alpha_{-k-l} alpha_k alpha_l (ordered pairs).
  for (int l = 1; l <= m; ++l) {
    int ml = multiplicity(mu, l);
    if (ml == 0) continue;
    Partition muL = removePart(mu, l);
    for (int k = 1; k <= m; ++k) {
      int mk = multiplicity(muL, k);
      if (mk == 0) continue;
      Partition nu = addPart(removePart(muL, k), k + l);
      Rational coef = Rational(-1, 2) * Rational(l * ml) * Rational(k * mk);
      acc[nu] += RationalFunction(coef);
    }
  }

  // Joining: (1/2) t1 t2 sum_{k,l>0} alpha_{k+l} alpha_{-k} alpha_{-l}.
  {
    std::vector<int> distinct = mu;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int p : distinct) {
      if (p < 2) continue;
      int mp = multiplicity(mu, p);
      Partition muP = removePart(mu, p);
      for (int k = 1; k <= p - 1; ++k) {
        int l = p - k;  // ordered pairs (k, l)
        Partition nu = addPart(addPart(muP, k), l);
        Rational coef = Rational(1, 2) * Rational(p * mp);
        acc[nu] += RationalFunction(t1t2().scaled(coef));
      }
    }
  }

  FockVector out;
  Rational zmu = zFactor(mu);
  for (auto& [nu, val] : acc) {
    if (val.isZero()) continue;
    out[nu] = val * RationalFunction(zFactor(nu) / zmu);
  }
  return out;
}

MDMatrix mdMatrix(int m) {
  if (m < 1) throw RangeError("m must be >= 1");
  MDMatrix out;
  out.m = m;
  out.basis = partitionsOf(m);
  int d = static_cast<int>(out.basis.size());
  out.mat = Mat<RationalFunctionRing>(RationalFunctionRing{}, d, d);
  for (int col = 0; col < d; ++col) {
    FockVector v = mdApply(m, out.basis[col]);
    for (int row = 0; row < d; ++row) {
      auto it = v.find(out.basis[row]);
      if (it != v.end()) out.mat(row, col) = it->second;
    }
  }
  return out;
}

RationalFunction threePointSeries(int m, const Partition& mu1, const Partition& mu2) {
  checkPartition(mu1);
  checkPartition(mu2);
  if (weight(mu1) != m || weight(mu2) != m)
    throw SizeMismatch("partitions must have size m");
  FockVector v = mdApply(m, mu2);
  auto it = v.find(mu1);
  if (it == v.end()) return RationalFunction();
  return it->second * fockInner(mu1, mu1);
}

namespace {

// Fraction-free Bareiss determinant over the polynomial ring.
Polynomial polyDeterminant(std::vector<std::vector<Polynomial>> m) {
  int n = static_cast<int>(m.size());
  Polynomial prev(Rational(1));
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].isZero()) {
          swap = r;
          break;
        }
      if (swap < 0) return Polynomial();
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = v.isZero() ? v : v.divExact(prev);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Polynomial polyLcm(const Polynomial& a, const Polynomial& b) {
  Polynomial g = polyGcd(a, b);
  return a * b.divExact(g);
}

}  // namespace

RationalFunction semisimplicityWitness(int m) {
  if (m < 2) throw RangeError("m must be >= 2");
  MDMatrix md = mdMatrix(m);
  int n = static_cast<int>(md.basis.size());
  RationalFunctionRing ring;

  // Faddeev-LeVerrier: char(x) = x^n + c_1 x^{n-1} + ... + c_n.
  std::vector<RationalFunction> c(n + 1);
  c[0] = RationalFunction(Rational(1));
  Mat<RationalFunctionRing> mk = md.mat;
  for (int k = 1; k <= n; ++k) {
    RationalFunction tr;
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    c[k] = -(tr / RationalFunction(Rational(k)));
    if (k < n) {
      Mat<RationalFunctionRing> shifted = mk;
      for (int i = 0; i < n; ++i) shifted(i, i) += c[k];
      mk = matMul(ring, md.mat, shifted);
    }
  }

  // Clear denominators: Ptilde(x) = D p(x) has polynomial coefficients.
  Polynomial den(Rational(1));
  for (int k = 1; k <= n; ++k) den = polyLcm(den, c[k].den());
  std::vector<Polynomial> pt(n + 1);  // low power first
  for (int k = 0; k <= n; ++k)
    pt[n - k] = c[k].num() * den.divExact(c[k].den());
  std::vector<Polynomial> dpt(n);
  for (int i = 1; i <= n; ++i) dpt[i - 1] = pt[i].scaled(Rational(i));

  // Sylvester matrix of (Ptilde, Ptilde'), size 2n-1.
  int size = 2 * n - 1;
  std::vector<std::vector<Polynomial>> syl(size, std::vector<Polynomial>(size));
  for (int r = 0; r < n - 1; ++r)
    for (int i = 0; i <= n; ++i) syl[r][r + n - i] = pt[i];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= n - 1; ++i) syl[n - 1 + r][r + n - 1 - i] = dpt[i];
  Polynomial res = polyDeterminant(std::move(syl));

  // Res(p, p') = Res(Ptilde, Ptilde') / D^{2n-1}; disc = +-Res(p,p') as lc = 1.
  Polynomial dpow(Rational(1));
  for (int i = 0; i < 2 * n - 1; ++i) dpow *= den;
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) res = -res;
  return RationalFunction(std::move(res), std::move(dpow));
}

std::vector<RationalFunction> qSeriesExpansion(const RationalFunction& f, int order) {
  // Split numerator and denominator into powers of q with t-only coefficients.
  auto split = [](const Polynomial& p, int top) {
    std::vector<RationalFunction> out(top + 1);
    std::vector<Polynomial> u = p.toUnivariate(2);
    for (int i = 0; i <= top && i < static_cast<int>(u.size()); ++i)
      out[i] = RationalFunction(u[i]);
    return out;
  };
  std::vector<RationalFunction> num = split(f.num(), order);
  std::vector<RationalFunction> den = split(f.den(), std::max(order, f.den().degree(2)));
  if (den[0].isZero()) throw DivisionByZero();
  std::vector<RationalFunction> out(order + 1);
  for (int k = 0; k <= order; ++k) {
    RationalFunction acc = num[k];
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      acc -= den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

}  // namespace cohft
