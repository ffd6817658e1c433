#pragma once

#include <memory>
#include <vector>

#include "cohft/reconstruction.hpp"

namespace cohft {

// Level-truncated sl2 fusion rule: 1 iff |a-b| <= c <= min(a+b, 2l-a-b) and
// a+b+c even.
int sl2Fusion(int level, int a, int b, int c);

// Conformal anomaly c = 3l/(l+2) for sl2.
Rational verlindeAnomaly(int level);
// w(a) = a(a+2) / (4(l+2)); the sl(r) highest-weight formula at r = 2.
Rational verlindeWeight(int level, int a);

// Fusion Frobenius data: basis = weights 0..l, eta = identity, unit = 0.
FrobeniusData verlindeFrobenius(int level);

// Rank of the conformal-block bundle by fusion gluing.
long verlindeRank(int level, int g, const std::vector<int>& weights);

// Diagonal R-matrix exp(t z (-w(mu) + c/24)) over Q[t]/(t^{tOrder+1}).
RMatrix<TruncSeriesRing> verlindeRMatrix(int level, int order, int tOrder);

// Shared engine instance for (level, order, tOrder).
std::shared_ptr<Theory<TruncSeriesRing>> verlindeTheory(int level, int order, int tOrder);

// Reconstructed Chern-character correlator as a polynomial in t
// (coefficients of t^0..t^tOrder).
TruncSeries verlindeCorrelator(int level, int g, const std::vector<int>& weights,
                               const std::vector<int>& psi, int tOrder);

// Degree-0 part of the level-1 even-graph formula: the edgeless term gives
// 2^g, which must match the gluing rank on all-standard insertions (n even).
bool level1EvenRankCheck(int g, int n);

}  // namespace cohft
