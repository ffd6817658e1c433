#include "cohft/rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>

namespace cohft {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ValidationError("bad rational literal: " + s);
  if (v.get_den() == 0) throw DivisionByZero();
  v.canonicalize();
  return Rational(v);
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(mpq_class(z));
}

Rational Rational::factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(mpq_class(z));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (isZero()) throw DivisionByZero();
  return Rational(mpq_class(1) / v_);
}

long Rational::toLong() const {
  if (!isInteger() || !v_.get_num().fits_slong_p())
    throw RangeError("rational does not fit a long: " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  return v_.get_str();
}

std::size_t Rational::hash() const {
  // FNV-1a over the canonical decimal form; stable across runs.
  std::string s = str();
  std::size_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational bernoulli(int n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc(0);
    for (int j = 0; j < m; ++j)
      acc += Rational::binomial(m + 1, j) * cache[j];
    cache.push_back(-acc / Rational::binomial(m + 1, m));
  }
  return cache[n];
}

}  // namespace cohft
