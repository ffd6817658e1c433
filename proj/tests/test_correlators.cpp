#include <doctest.h>

#include <numeric>
#include <random>

#include "cohft/psi_correlators.hpp"

using namespace cohft;

TEST_CASE("psi correlator pinned values") {
  CHECK(psiCorrelator(0, {0, 0, 0}) == Rational(1));
  CHECK(psiCorrelator(0, {1, 0, 0, 0}) == Rational(1));
  CHECK(psiCorrelator(0, {2, 0, 0, 0, 0}) == Rational(1));
  CHECK(psiCorrelator(0, {1, 1, 0, 0, 0}) == Rational(2));
  CHECK(psiCorrelator(1, {1}) == Rational(1, 24));
  CHECK(psiCorrelator(1, {0, 2}) == Rational(1, 24));
  CHECK(psiCorrelator(1, {1, 1}) == Rational(1, 24));
  CHECK(psiCorrelator(2, {4}) == Rational(1, 1152));
  CHECK(psiCorrelator(2, {0, 5}) == Rational(1, 1152));
  CHECK(psiCorrelator(2, {1, 4}) == Rational(1, 384));
  // degree mismatch
  CHECK(psiCorrelator(1, {3}) == Rational(0));
  CHECK(psiCorrelator(0, {0, 0, 0, 0}) == Rational(0));
  CHECK_THROWS_AS(psiCorrelator(0, {0, 0}), UnstablePair);
}

TEST_CASE("string and dilaton equations") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> genus(0, 2);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int g = genus(rng);
    int n = count(rng);
    if (2 * g - 2 + n <= 0) continue;
    int dim = 3 * g - 3 + n;
    // random exponents with correct total degree
    std::vector<int> a(n, 0);
    std::uniform_int_distribution<int> pos(0, n - 1);
    for (int d = 0; d < dim; ++d) a[pos(rng)] += 1;

    // string
    std::vector<int> withZero = a;
    withZero.push_back(0);
    Rational lhs = psiCorrelator(g, withZero);
    Rational rhs(0);
    for (int j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      std::vector<int> red = a;
      red[j] -= 1;
      rhs += psiCorrelator(g, red);
    }
    CHECK(lhs == rhs);

    // dilaton
    std::vector<int> withOne = a;
    withOne.push_back(1);
    CHECK(psiCorrelator(g, withOne) == Rational(2 * g - 2 + n) * psiCorrelator(g, a));
  }
}

TEST_CASE("symmetry under permutation of exponents") {
  std::mt19937_64 rng(12);
  std::vector<int> a = {3, 0, 1, 0};
  Rational base = psiCorrelator(1, a);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(a.begin(), a.end(), rng);
    CHECK(psiCorrelator(1, a) == base);
  }
}

TEST_CASE("forgetful pushforward expansions") {
  SUBCASE("single point gives kappa_{e-1}") {
    KappaPolynomial kp = forgetfulPushforward({3});
    REQUIRE(kp.size() == 1);
    CHECK(kp.at({2}) == Rational(1));
  }
  SUBCASE("two points: kappa_a kappa_b + kappa_{a+b}") {
    KappaPolynomial kp = forgetfulPushforward({2, 4});
    REQUIRE(kp.size() == 2);
    CHECK(kp.at(std::vector<int>{1, 3}) == Rational(1));
    CHECK(kp.at(std::vector<int>{4}) == Rational(1));
  }
  SUBCASE("(2,2,2): kappa_1^3 + 3 kappa_1 kappa_2 + 2 kappa_3") {
    KappaPolynomial kp = forgetfulPushforward({2, 2, 2});
    REQUIRE(kp.size() == 3);
    CHECK(kp.at(std::vector<int>{1, 1, 1}) == Rational(1));
    CHECK(kp.at(std::vector<int>{1, 2}) == Rational(3));
    CHECK(kp.at(std::vector<int>{3}) == Rational(2));
  }
  CHECK_THROWS_AS(forgetfulPushforward({1}), RangeError);
}

TEST_CASE("kappa-psi correlator pinned values") {
  CHECK(kappaPsiCorrelator(1, {0}, {1}) == Rational(1, 24));
  CHECK(kappaPsiCorrelator(0, {0, 0, 0, 0}, {1}) == Rational(1));
  CHECK(kappaPsiCorrelator(0, {0, 0, 0, 0, 0}, {2}) == Rational(1));
  CHECK(kappaPsiCorrelator(0, {0, 0, 0, 0, 0}, {1, 1}) == Rational(5));
  CHECK(kappaPsiCorrelator(0, {0, 0, 0}, {1}) == Rational(0));  // degree mismatch
}

TEST_CASE("pushforward route agrees with direct integrals") {
  // int_{Mbar_{g,n}} psi-monomial * p_{m*}(prod psi^{e_j}) equals the direct
  // correlator on Mbar_{g,n+m} with the same exponents appended.
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> genus(0, 2);
  std::uniform_int_distribution<int> baseCount(1, 3);
  std::uniform_int_distribution<int> extraCount(1, 3);
  int done = 0;
  while (done < 40) {
    int g = genus(rng);
    int n = baseCount(rng);
    int m = extraCount(rng);
    if (2 * g - 2 + n <= 0 || n + m > 6) continue;
    int dim = 3 * g - 3 + n + m;
    std::vector<int> extras(m, 2);
    std::vector<int> base(n, 0);
    int rem = dim - 2 * m;
    if (rem < 0) continue;
    std::uniform_int_distribution<int> where(0, n + m - 1);
    for (int d = 0; d < rem; ++d) {
      int w = where(rng);
      if (w < n)
        base[w] += 1;
      else
        extras[w - n] += 1;
    }
    ++done;

    std::vector<int> direct = base;
    direct.insert(direct.end(), extras.begin(), extras.end());
    Rational route1 = psiCorrelator(g, direct);
    Rational route2 = kappaPolyIntegral(g, base, forgetfulPushforward(extras));
    CHECK(route1 == route2);
  }
}
