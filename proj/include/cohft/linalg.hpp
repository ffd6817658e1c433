#pragma once

#include <vector>

#include "cohft/errors.hpp"
#include "cohft/rings.hpp"

namespace cohft {

// Dense square-ish matrix over a ring context.
template <typename Ring>
struct Mat {
  using Elem = typename Ring::Elem;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(const Ring& ring, int r, int c) : rows(r), cols(c), a(r * c, ring.zero()) {}
  static Mat identity(const Ring& ring, int n) {
    Mat m(ring, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  Elem& operator()(int r, int c) { return a[r * cols + c]; }
  const Elem& operator()(int r, int c) const { return a[r * cols + c]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

template <typename Ring>
Mat<Ring> matMul(const Ring& ring, const Mat<Ring>& x, const Mat<Ring>& y) {
  Mat<Ring> out(ring, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (ring.isZero(x(i, k))) continue;
      for (int j = 0; j < y.cols; ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

template <typename Ring>
Mat<Ring> matAdd(const Ring& ring, const Mat<Ring>& x, const Mat<Ring>& y) {
  Mat<Ring> out(ring, x.rows, x.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

template <typename Ring>
Mat<Ring> matSub(const Ring& ring, const Mat<Ring>& x, const Mat<Ring>& y) {
  Mat<Ring> out(ring, x.rows, x.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
  return out;
}

template <typename Ring>
Mat<Ring> matTranspose(const Ring& ring, const Mat<Ring>& x) {
  Mat<Ring> out(ring, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out(j, i) = x(i, j);
  return out;
}

template <typename Ring>
bool matIsZero(const Ring& ring, const Mat<Ring>& x) {
  for (const auto& e : x.a)
    if (!ring.isZero(e)) return false;
  return true;
}

// Gauss-Jordan inverse over a field-like ring (elements must support
// .inverse()). Throws SingularPairing when not invertible.
template <typename Ring>
Mat<Ring> matInverse(const Ring& ring, Mat<Ring> m) {
  if (m.rows != m.cols) throw SingularPairing();
  int n = m.rows;
  Mat<Ring> inv = Mat<Ring>::identity(ring, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!ring.isZero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularPairing();
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    auto pinv = m(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      m(col, j) = m(col, j) * pinv;
      inv(col, j) = inv(col, j) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || ring.isZero(m(r, col))) continue;
      auto f = m(r, col);
      for (int j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

using RatMat = Mat<RationalRing>;

}  // namespace cohft
