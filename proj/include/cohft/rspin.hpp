#pragma once

#include <memory>
#include <vector>

#include "cohft/reconstruction.hpp"
#include "cohft/trunc_series.hpp"

namespace cohft {

// dim of the sl2-invariant subspace of rho_{b_1} x ... x rho_{b_n}
// by iterated Clebsch-Gordan decomposition.
long sl2InvariantDim(const std::vector<int>& weights);

// dim[rho_a x rho_b x rho_c]^{sl2} when a+b+c <= 2r-4, else 0.
// Structure constant of the shifted r-spin quantum product.
int fusionCoefficient(int r, int a, int b, int c);

// Degree of Witten's class: ((r-2)(g-1) + sum a_i) / r.
Rational rspinDegree(int r, int g, const std::vector<int>& a);

// Frobenius data of the shifted theory: eta_{ab} = delta_{a+b,r-2}, unit e_0,
// threePoint(a,b,c) = fusion(a, b, (r-2)-c).
FrobeniusData rspinFrobenius(int r);

// omega-hat values by fusion gluing (exact).
Rational rspinTopologicalExact(int r, int g, const std::vector<int>& a);

// Closed trigonometric form of the topological part; float cross-check only.
double rspinTopologicalFloat(int r, int g, int n, const std::vector<int>& a);

struct BSeries {
  TruncSeries even;  // even powers of z
  TruncSeries odd;   // odd powers of z
};

// Hypergeometric series B_{r,a}(z), split into even and odd parts.
BSeries bSeries(int r, int a, int order);

// R-matrix of the shifted theory: Be on the diagonal, Bo on the antidiagonal.
RMatrix<RationalRing> rspinRMatrix(int r, int order);

// Shared engine instance for (r, order); caches survive across calls.
std::shared_ptr<Theory<RationalRing>> rspinTheory(int r, int order);

// Integral of Witten's class against psi powers, through the shifted theory.
// Returns 0 when the degree formula is non-integral or fails to complement
// the psi degree to 3g-3+n.
Rational wittenIntegral(int r, int g, const std::vector<int>& a, const std::vector<int>& psi);

// Normalized idempotent identities (Prop-style float check at tolerance).
bool idempotentCheckFloat(int r, double tol = 1e-9);

// Exact check of [R_{m+1}, xi] = (m - mu) R_m against the B-series matrix,
// with xi the antidiagonal of 2s and mu = diag(-(r-2),...,r-2)/(2r).
bool eulerCommutationCheck(int r, int order);

}  // namespace cohft
