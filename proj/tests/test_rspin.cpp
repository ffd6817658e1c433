#include <doctest.h>

#include <cmath>
#include <random>

#include "cohft/rspin.hpp"

using namespace cohft;

TEST_CASE("sl2 invariant dimensions by Clebsch-Gordan") {
  CHECK(sl2InvariantDim({1, 1}) == 1);
  CHECK(sl2InvariantDim({1, 1, 2}) == 1);
  CHECK(sl2InvariantDim({1, 1, 1}) == 0);
  CHECK(sl2InvariantDim({2, 2, 2}) == 1);
  CHECK(sl2InvariantDim({1, 1, 1, 1}) == 2);
  CHECK(sl2InvariantDim({0}) == 1);
  CHECK(sl2InvariantDim({3}) == 0);
}

TEST_CASE("fusion coefficients") {
  CHECK(fusionCoefficient(3, 1, 1, 0) == 1);
  CHECK(fusionCoefficient(3, 1, 1, 1) == 0);  // parity and level bound
  CHECK(fusionCoefficient(5, 1, 1, 2) == 1);
  CHECK(fusionCoefficient(5, 3, 3, 3) == 0);  // 9 > 2r-4 = 6
  CHECK(fusionCoefficient(7, 3, 3, 4) == 1);
  CHECK_THROWS_AS(fusionCoefficient(3, 2, 0, 0), RangeError);
  // parity: odd total weight vanishes
  for (int r = 3; r <= 6; ++r)
    for (int a = 0; a <= r - 2; ++a)
      for (int b = 0; b <= r - 2; ++b)
        for (int c = 0; c <= r - 2; ++c)
          if ((a + b + c) % 2 == 1) CHECK(fusionCoefficient(r, a, b, c) == 0);
}

TEST_CASE("degree formula") {
  CHECK(rspinDegree(3, 0, {1, 1, 1, 1}) == Rational(1));
  CHECK(rspinDegree(5, 0, {1, 1, 3, 3}) == Rational(1));
  CHECK(rspinDegree(5, 1, {1}) == Rational(1, 5));  // non-integral
  CHECK(rspinDegree(2, 2, {}) == Rational(0));
}

TEST_CASE("topological part: exact gluing values") {
  // 3-point values with a_1+a_2+a_3 = r-2 are 1; the shift adds nothing in
  // degree 0 on a point.
  CHECK(rspinTopologicalExact(3, 0, {1, 0, 0}) == Rational(1));
  CHECK(rspinTopologicalExact(4, 0, {1, 1, 0}) == Rational(1));
  CHECK(rspinTopologicalExact(3, 0, {1, 1, 0}) == Rational(0));  // sum != r-2, odd shift parity
  CHECK(rspinTopologicalExact(3, 0, {1, 1, 1}) == Rational(1));  // one shift insertion
  CHECK(rspinTopologicalExact(5, 1, {0}) == Rational(4));
  // r=2: one-dimensional fusion, trivial theory values
  for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {2, 0}, {2, 3}}) {
    std::vector<int> zero(n, 0);
    CHECK(rspinTopologicalExact(2, g, zero) == Rational(1));
  }
}

TEST_CASE("topological part: closed sin form matches exact gluing") {
  for (int r = 2; r <= 8; ++r) {
    std::mt19937_64 rng(1000 + r);
    std::uniform_int_distribution<int> weight(0, r - 2);
    for (int g = 0; g <= 3; ++g)
      for (int n = (g == 0 ? 3 : (g == 1 ? 1 : 0)); n <= 5; ++n) {
        if (2 * g - 2 + n <= 0) continue;
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<int> a(n);
          for (auto& x : a) x = weight(rng);
          double exact = rspinTopologicalExact(r, g, a).toDouble();
          double closed = rspinTopologicalFloat(r, g, n, a);
          double scale = std::max({1.0, std::abs(exact), std::abs(closed)});
          CHECK(std::abs(exact - closed) / scale < 1e-9);
        }
      }
  }
}

TEST_CASE("hypergeometric B-series") {
  SUBCASE("constant term is 1") {
    for (int r = 2; r <= 6; ++r)
      for (int a = 0; a <= r - 2; ++a) CHECK(bSeries(r, a, 3).even.coeff(0) == Rational(1));
  }
  SUBCASE("r=3, a=0: z-coefficient is -5/144") {
    BSeries b = bSeries(3, 0, 2);
    CHECK(b.odd.coeff(1) == Rational(-5, 144));
    CHECK(b.even.coeff(1) == Rational(0));
  }
  SUBCASE("r=2 collapses to 1") {
    BSeries b = bSeries(2, 0, 5);
    for (int k = 1; k <= 5; ++k) {
      CHECK(b.even.coeff(k) == Rational(0));
      CHECK(b.odd.coeff(k) == Rational(0));
    }
  }
}

TEST_CASE("r-spin R-matrix structure") {
  SUBCASE("r=2 is the identity") {
    auto r = rspinRMatrix(2, 5);
    for (int k = 1; k <= 5; ++k) CHECK(matIsZero(RationalRing{}, r.coeff[k]));
    CHECK(r.coeff[0](0, 0) == Rational(1));
  }
  SUBCASE("r=3 matches the printed matrix through order 3") {
    auto r = rspinRMatrix(3, 3);
    BSeries b0 = bSeries(3, 0, 3), b1 = bSeries(3, 1, 3);
    for (int k = 0; k <= 3; ++k) {
      CHECK(r.coeff[k](0, 0) == b0.even.coeff(k));
      CHECK(r.coeff[k](0, 1) == b1.odd.coeff(k));
      CHECK(r.coeff[k](1, 0) == b0.odd.coeff(k));
      CHECK(r.coeff[k](1, 1) == b1.even.coeff(k));
    }
  }
  SUBCASE("r=4: zero off the diagonals, center entry 1") {
    auto r = rspinRMatrix(4, 3);
    BSeries b0 = bSeries(4, 0, 3), b2 = bSeries(4, 2, 3);
    for (int k = 0; k <= 3; ++k) {
      CHECK(r.coeff[k](0, 1) == Rational(0));
      CHECK(r.coeff[k](1, 0) == Rational(0));
      CHECK(r.coeff[k](1, 2) == Rational(0));
      CHECK(r.coeff[k](2, 1) == Rational(0));
      CHECK(r.coeff[k](0, 0) == b0.even.coeff(k));
      CHECK(r.coeff[k](2, 0) == b0.odd.coeff(k));
      CHECK(r.coeff[k](0, 2) == b2.odd.coeff(k));
      CHECK(r.coeff[k](2, 2) == b2.even.coeff(k));
      CHECK(r.coeff[k](1, 1) == (k == 0 ? Rational(1) : Rational(0)));
    }
  }
  SUBCASE("symplectic to order 6 for r <= 8") {
    RationalRing ring;
    for (int r = 2; r <= 8; ++r) {
      FrobeniusData f = rspinFrobenius(r);
      CHECK(isSymplectic(ring, rspinRMatrix(r, 6), f.eta(), f.etaInverse()));
    }
  }
}

TEST_CASE("euler commutation relation") {
  CHECK(eulerCommutationCheck(2, 4));
  CHECK(eulerCommutationCheck(3, 4));
  CHECK(eulerCommutationCheck(4, 3));
  CHECK(eulerCommutationCheck(5, 4));
  CHECK(eulerCommutationCheck(6, 4));
}

TEST_CASE("idempotent identities in float") {
  for (int r = 2; r <= 8; ++r) CHECK(idempotentCheckFloat(r));
}

TEST_CASE("witten integrals: genus-0 initial conditions") {
  SUBCASE("3-point values are fusion deltas (Eq-style initial condition)") {
    for (int r = 2; r <= 8; ++r)
      for (int a1 = 0; a1 <= r - 2; ++a1)
        for (int a2 = 0; a2 <= r - 2; ++a2)
          for (int a3 = 0; a3 <= r - 2; ++a3) {
            Rational expect(a1 + a2 + a3 == r - 2 ? 1 : 0);
            CHECK(wittenIntegral(r, 0, {a1, a2, a3}, {}) == expect);
          }
  }
  SUBCASE("4-point value 1/r") {
    for (int r = 3; r <= 8; ++r)
      CHECK(wittenIntegral(r, 0, {1, 1, r - 2, r - 2}, {}) == Rational(1, r));
  }
}

TEST_CASE("witten integrals: genus-0 closed formula (sl2 route)") {
  // D = n-3 instances match (n-3)!/r^{n-3} dim[rho_{r-2-a_i}]^{sl2}.
  for (int r = 3; r <= 5; ++r) {
    for (int n = 3; n <= 5; ++n) {
      int target = r * (n - 3) + (r - 2);
      std::vector<int> a(n, 0);
      auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == n) {
          if (rem != 0) return;
          Rational lhs = wittenIntegral(r, 0, a, {});
          std::vector<int> comp(n);
          for (int j = 0; j < n; ++j) comp[j] = r - 2 - a[j];
          long rpow = 1;
          for (int j = 0; j < n - 3; ++j) rpow *= r;
          Rational rhs = Rational::factorial(n - 3) *
                         Rational(sl2InvariantDim(comp)) / Rational(rpow);
          CHECK(lhs == rhs);
          return;
        }
        for (int x = 0; x <= std::min(rem, r - 2); ++x) {
          a[i] = x;
          self(self, i + 1, rem - x);
        }
      };
      rec(rec, 0, target);
    }
  }
}

TEST_CASE("witten integral degree gates") {
  // non-integral degree
  CHECK(wittenIntegral(5, 1, {1}, {}) == Rational(0));
  // integral degree but psi mismatch
  CHECK(wittenIntegral(3, 0, {1, 1, 1, 1}, {1, 0, 0, 0}) == Rational(0));
  // psi exponents complementing the degree
  CHECK(wittenIntegral(3, 0, {1, 1, 1, 1}, {0, 0, 0, 0}) == Rational(1, 3));
  CHECK_THROWS_AS(wittenIntegral(3, 0, {1, 1}, {}), UnstablePair);
  CHECK_THROWS_AS(wittenIntegral(3, 0, {5, 1, 1}, {}), RangeError);
}

TEST_CASE("r=2 witten theory equals the trivial theory") {
  // With R = Id and one-dimensional fusion, every correlator is
  // topological x psi-integral of the trivial CohFT.
  for (auto [g, n] : {std::pair{1, 1}, {1, 2}, {0, 4}}) {
    int dim = 3 * g - 3 + n;
    std::vector<int> a(n, 0), psi(n, 0);
    psi[0] = dim;
    CHECK(wittenIntegral(2, g, a, psi) == psiCorrelator(g, psi));
  }
}
