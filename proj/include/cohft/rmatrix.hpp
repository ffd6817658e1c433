#pragma once

#include <vector>

#include "cohft/bivariate.hpp"
#include "cohft/frobenius.hpp"
#include "cohft/linalg.hpp"
#include "cohft/trunc_series.hpp"

namespace cohft {

// R(z) = Id + R_1 z + ... + R_N z^N with d x d coefficient matrices over the
// theory's coefficient ring.
template <typename Ring>
struct RMatrix {
  using Elem = typename Ring::Elem;
  std::vector<Mat<Ring>> coeff;  // index = power of z

  int order() const { return static_cast<int>(coeff.size()) - 1; }
  int dim() const { return coeff.empty() ? 0 : coeff[0].rows; }
};

template <typename Ring>
RMatrix<Ring> identityRMatrix(const Ring& ring, int dim, int order) {
  RMatrix<Ring> r;
  r.coeff.assign(order + 1, Mat<Ring>(ring, dim, dim));
  r.coeff[0] = Mat<Ring>::identity(ring, dim);
  return r;
}

// eta-adjoint coefficient: R*_k = eta^{-1} R_k^T eta.
template <typename Ring>
Mat<Ring> etaAdjoint(const Ring& ring, const Mat<Ring>& rk, const Mat<Ring>& eta,
                     const Mat<Ring>& etaInv) {
  return matMul(ring, matMul(ring, etaInv, matTranspose(ring, rk)), eta);
}

// Exact check of R(z) R*(-z) = Id through the truncation order.
template <typename Ring>
bool isSymplectic(const Ring& ring, const RMatrix<Ring>& r, const Mat<Ring>& eta,
                  const Mat<Ring>& etaInv) {
  int d = r.dim();
  for (int s = 0; s <= r.order(); ++s) {
    Mat<Ring> acc(ring, d, d);
    for (int i = 0; i <= s; ++i) {
      int j = s - i;
      Mat<Ring> term = matMul(ring, r.coeff[i], etaAdjoint(ring, r.coeff[j], eta, etaInv));
      if (j % 2 == 1)
        acc = matSub(ring, acc, term);
      else
        acc = matAdd(ring, acc, term);
    }
    if (s == 0) acc = matSub(ring, acc, Mat<Ring>::identity(ring, d));
    if (!matIsZero(ring, acc)) return false;
  }
  return true;
}

// Edge kernel Delta with (z+w) Delta(z,w) = eta^{-1} - R(z) eta^{-1} R(w)^T,
// stored as Delta[k][l] for k+l <= order-1. Throws NonSymplectic if the
// numerator fails to vanish on z = -w.
template <typename Ring>
struct EdgeKernel {
  // delta[k][l] with k+l <= order-1; empty when order == 0.
  std::vector<std::vector<Mat<Ring>>> delta;
  int order = 0;  // truncation order of the underlying R-matrix

  const Mat<Ring>& at(int k, int l) const { return delta.at(k).at(l); }
};

template <typename Ring>
EdgeKernel<Ring> edgeKernel(const Ring& ring, const RMatrix<Ring>& r, const Mat<Ring>& etaInv) {
  int d = r.dim();
  int n = r.order();
  // Numerator coefficients N_{k,l} = delta_{k0} delta_{l0} eta^{-1} - R_k eta^{-1} R_l^T.
  std::vector<std::vector<Mat<Ring>>> num(n + 1);
  for (int k = 0; k <= n; ++k)
    for (int l = 0; k + l <= n; ++l) {
      Mat<Ring> m = matMul(ring, matMul(ring, r.coeff[k], etaInv),
                           matTranspose(ring, r.coeff[l]));
      for (auto& e : m.a) e = -e;
      if (k == 0 && l == 0) m = matAdd(ring, m, etaInv);
      num[k].push_back(std::move(m));
    }

  EdgeKernel<Ring> out;
  out.order = n;
  out.delta.resize(n);
  for (int k = 0; k + 1 <= n; ++k) out.delta[k].assign(n - k, Mat<Ring>(ring, d, d));
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) {
      BivariateSeries<Ring> series(ring, n);
      for (int k = 0; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l) series.setCoeff(k, l, num[k][l](row, col));
      BivariateSeries<Ring> q = [&] {
        try {
          return series.divideByZPlusW();
        } catch (const NonDivisible& e) {
          throw NonSymplectic(std::string("edge kernel: ") + e.what());
        }
      }();
      for (int k = 0; k + 1 <= n; ++k)
        for (int l = 0; k + l <= n - 1; ++l) out.delta[k][l](row, col) = q.coeff(k, l);
    }
  return out;
}

// T(z) = z (Id - R(z)) 1: T_k = -(R_{k-1} 1) for k >= 2.
template <typename Ring>
std::vector<std::vector<typename Ring::Elem>> unitTranslation(const Ring& ring,
                                                              const RMatrix<Ring>& r,
                                                              int unitIndex) {
  int d = r.dim();
  std::vector<std::vector<typename Ring::Elem>> t(r.order() + 2);
  for (int k = 2; k <= r.order() + 1; ++k) {
    std::vector<typename Ring::Elem> v(d, ring.zero());
    for (int row = 0; row < d; ++row) v[row] = -r.coeff[k - 1](row, unitIndex);
    t[k] = std::move(v);
  }
  return t;
}

// Hodge CohFT R-matrix: exp(-sum_k B_{2k}/((2k)(2k-1)) z^{2k-1}), dim 1.
RMatrix<RationalRing> hodgeRMatrix(int order);

}  // namespace cohft
