#include "cohft/psi_correlators.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "cohft/errors.hpp"

namespace cohft {

namespace {

// (2k+1)!! with (-1)!! = 1.
Rational oddDoubleFactorial(int k) {
  Rational f(1);
  for (int i = 1; i <= 2 * k + 1; i += 2) f *= Rational(i);
  return f;
}

struct PsiKey {
  int g;
  std::vector<int> a;
  bool operator<(const PsiKey& o) const {
    if (g != o.g) return g < o.g;
    return a < o.a;
  }
};

std::map<PsiKey, Rational>& psiCache() {
  static std::map<PsiKey, Rational> cache;
  return cache;
}
std::mutex& psiMutex() {
  static std::mutex mu;
  return mu;
}

Rational psiImpl(int g, std::vector<int> a);

// Value with unstable or off-degree inputs treated as zero; used inside the
// recursion where such terms simply drop out.
Rational psiOrZero(int g, std::vector<int> a) {
  int n = static_cast<int>(a.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return Rational(0);
  if (std::accumulate(a.begin(), a.end(), 0) != 3 * g - 3 + n) return Rational(0);
  for (int x : a)
    if (x < 0) return Rational(0);
  return psiImpl(g, std::move(a));
}

// Dijkgraaf-Verlinde-Verlinde recursion on the marking with the largest
// exponent, with seeds <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
Rational psiImpl(int g, std::vector<int> a) {
  std::sort(a.begin(), a.end());
  int n = static_cast<int>(a.size());

  {
    std::lock_guard<std::mutex> lock(psiMutex());
    auto it = psiCache().find({g, a});
    if (it != psiCache().end()) return it->second;
  }

  Rational result(0);
  if (g == 0) {
    // (n-3)! / prod a_i!
    result = Rational::factorial(n - 3);
    for (int x : a) result /= Rational::factorial(x);
  } else if (g == 1 && n == 1) {
    result = Rational(1, 24);  // seed
  } else {
    int k = a.back() - 1;  // recurse on tau_{k+1}
    std::vector<int> rest(a.begin(), a.end() - 1);

    Rational rhs(0);
    for (std::size_t j = 0; j < rest.size(); ++j) {
      // (2k + 2a_j + 1)!! / (2a_j - 1)!!
      Rational coef = oddDoubleFactorial(k + rest[j]) / oddDoubleFactorial(rest[j] - 1);
      std::vector<int> next = rest;
      next.erase(next.begin() + j);
      next.push_back(k + rest[j]);
      rhs += coef * psiOrZero(g, std::move(next));
    }
    for (int x = 0; x <= k - 1; ++x) {
      int y = k - 1 - x;
      Rational coef = oddDoubleFactorial(x) * oddDoubleFactorial(y) / Rational(2);
      // Non-separating: genus drops by one, two new markings.
      {
        std::vector<int> next = rest;
        next.push_back(x);
        next.push_back(y);
        rhs += coef * psiOrZero(g - 1, std::move(next));
      }
      // Separating: split the genus and the remaining markings.
      for (int g1 = 0; g1 <= g; ++g1) {
        int g2 = g - g1;
        for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
          std::vector<int> s1{x}, s2{y};
          for (std::size_t j = 0; j < rest.size(); ++j)
            ((mask >> j) & 1 ? s1 : s2).push_back(rest[j]);
          rhs += coef * psiOrZero(g1, std::move(s1)) * psiOrZero(g2, std::move(s2));
        }
      }
    }
    result = rhs / oddDoubleFactorial(k + 1);
  }

  std::lock_guard<std::mutex> lock(psiMutex());
  psiCache().emplace(PsiKey{g, std::move(a)}, result);
  return result;
}

}  // namespace

Rational psiCorrelator(int g, std::vector<int> exponents) {
  int n = static_cast<int>(exponents.size());
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  for (int x : exponents)
    if (x < 0) throw RangeError("negative psi exponent");
  return psiOrZero(g, std::move(exponents));
}

namespace {

void partitionsRec(const std::vector<int>& items, std::size_t idx,
                   std::vector<std::vector<int>>& blocks, KappaPolynomial& out) {
  if (idx == items.size()) {
    std::vector<int> kappa;
    Rational coef(1);
    for (const auto& b : blocks) {
      int sum = 0;
      for (int e : b) sum += e - 1;
      kappa.push_back(sum);
      coef *= Rational::factorial(b.size() - 1);
    }
    std::sort(kappa.begin(), kappa.end());
    out[kappa] += coef;
    return;
  }
  // Deeper levels push and pop on `blocks`; index with a fixed bound instead
  // of iterators.
  std::size_t count = blocks.size();
  for (std::size_t bi = 0; bi < count; ++bi) {
    blocks[bi].push_back(items[idx]);
    partitionsRec(items, idx + 1, blocks, out);
    blocks[bi].pop_back();
  }
  blocks.push_back({items[idx]});
  partitionsRec(items, idx + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

KappaPolynomial forgetfulPushforward(const std::vector<int>& exponents) {
  for (int e : exponents)
    if (e < 2) throw RangeError("pushforward exponents must be >= 2");
  KappaPolynomial out;
  if (exponents.empty()) {
    out[{}] = Rational(1);
    return out;
  }
  std::vector<std::vector<int>> blocks;
  partitionsRec(exponents, 0, blocks, out);
  return out;
}

namespace {

struct KappaKey {
  int g;
  std::vector<int> psi;
  std::vector<int> kappa;
  bool operator<(const KappaKey& o) const {
    if (g != o.g) return g < o.g;
    if (psi != o.psi) return psi < o.psi;
    return kappa < o.kappa;
  }
};

Rational kappaImpl(int g, std::vector<int> psi, std::vector<int> kappa) {
  int n = static_cast<int>(psi.size());
  int deg = std::accumulate(psi.begin(), psi.end(), 0) +
            std::accumulate(kappa.begin(), kappa.end(), 0);
  if (deg != 3 * g - 3 + n) return Rational(0);
  if (kappa.empty()) return psiOrZero(g, std::move(psi));

  std::sort(psi.begin(), psi.end());
  std::sort(kappa.begin(), kappa.end());

  static std::map<KappaKey, Rational> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({g, psi, kappa});
    if (it != cache.end()) return it->second;
  }

  // Trade kappa_b for a marking with psi^{b+1}; the pullback of each
  // remaining kappa_c picks up a -psi^c correction at the new point.
  int b = kappa.back();
  std::vector<int> rest(kappa.begin(), kappa.end() - 1);
  Rational acc(0);
  for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
    int extra = b + 1;
    std::vector<int> remaining;
    int bits = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if ((mask >> j) & 1) {
        extra += rest[j];
        ++bits;
      } else {
        remaining.push_back(rest[j]);
      }
    }
    std::vector<int> psiNext = psi;
    psiNext.push_back(extra);
    Rational term = kappaImpl(g, std::move(psiNext), std::move(remaining));
    acc += (bits % 2 == 0) ? term : -term;
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(KappaKey{g, std::move(psi), std::move(kappa)}, acc);
  return acc;
}

}  // namespace

Rational kappaPsiCorrelator(int g, std::vector<int> psiExponents, std::vector<int> kappaIndices) {
  int n = static_cast<int>(psiExponents.size());
  if (2 * g - 2 + n <= 0) throw UnstablePair(g, n);
  for (int x : psiExponents)
    if (x < 0) throw RangeError("negative psi exponent");
  for (int x : kappaIndices)
    if (x < 1) throw RangeError("kappa index must be >= 1");
  return kappaImpl(g, std::move(psiExponents), std::move(kappaIndices));
}

Rational kappaPolyIntegral(int g, const std::vector<int>& psiExponents,
                           const KappaPolynomial& kp) {
  Rational acc(0);
  for (const auto& [kappa, coef] : kp)
    acc += coef * kappaPsiCorrelator(g, psiExponents, kappa);
  return acc;
}

}  // namespace cohft
