#pragma once

#include <map>
#include <vector>

#include "cohft/rational.hpp"

namespace cohft {

// Integral of psi_1^{a_1} ... psi_n^{a_n} over Mbar_{g,n}. Zero on degree
// mismatch. Throws UnstablePair when 2g-2+n <= 0.
Rational psiCorrelator(int g, std::vector<int> exponents);

// Polynomial in kappa classes: multiset of indices -> integer coefficient.
using KappaPolynomial = std::map<std::vector<int>, Rational>;

// Pushforward of psi_{n+1}^{e_1} ... psi_{n+m}^{e_m} along the map forgetting
// the last m markings, as a polynomial in kappa classes on the base.
// Every exponent must be >= 2. Set-partition expansion: a block B contributes
// (|B|-1)! kappa_{sum_{j in B} (e_j - 1)}.
KappaPolynomial forgetfulPushforward(const std::vector<int>& exponents);

// Integral of a mixed psi/kappa monomial over Mbar_{g,n} with n = len(psi).
// kappa indices are >= 1; zero on degree mismatch.
Rational kappaPsiCorrelator(int g, std::vector<int> psiExponents, std::vector<int> kappaIndices);

// Integral of psi powers against a kappa polynomial.
Rational kappaPolyIntegral(int g, const std::vector<int>& psiExponents,
                           const KappaPolynomial& kp);

}  // namespace cohft
