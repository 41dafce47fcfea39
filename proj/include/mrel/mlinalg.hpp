#pragma once

// Three-dimensional vectors and matrices over 𝕄. Every product conjugates the
// left factor entrywise: (A·B)_ij = Σ_k a_ik* b_kj.

#include <array>

#include "mrel/malgebra.hpp"

namespace mrel {

template <Scalar S>
struct MVec3 {
  std::array<MNum<S>, 3> c{};

  MNum<S>& operator[](int k) { return c[k]; }
  const MNum<S>& operator[](int k) const { return c[k]; }

  friend bool operator==(const MVec3&, const MVec3&) = default;
  friend MVec3 operator+(const MVec3& a, const MVec3& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
  }
  friend MVec3 operator-(const MVec3& a, const MVec3& b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
  }
  friend MVec3 operator*(const S& k, const MVec3& a) { return {{k * a[0], k * a[1], k * a[2]}}; }
};

template <Scalar S>
struct MMat3 {
  std::array<std::array<MNum<S>, 3>, 3> a{};

  MNum<S>& operator()(int r, int c) { return a[r][c]; }
  const MNum<S>& operator()(int r, int c) const { return a[r][c]; }

  static MMat3 identity() {
    MMat3 m;
    for (int k = 0; k < 3; ++k) m(k, k) = MNum<S>::e();
    return m;
  }
  static MMat3 diag(const MNum<S>& d0, const MNum<S>& d1, const MNum<S>& d2) {
    MMat3 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
  }

  friend bool operator==(const MMat3&, const MMat3&) = default;
  friend MMat3 operator-(const MMat3& x, const MMat3& y) {
    MMat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = x(r, c) - y(r, c);
    return m;
  }
};

template <Scalar S>
MVec3<S> dot_mv(const MMat3<S>& A, const MVec3<S>& x) {
  MVec3<S> out;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) out[i] += conj(A(i, k)) * x[k];
  }
  return out;
}

template <Scalar S>
MMat3<S> dot_mm(const MMat3<S>& A, const MMat3<S>& B) {
  MMat3<S> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out(i, j) += conj(A(i, k)) * B(k, j);
    }
  }
  return out;
}

template <Scalar S>
MVec3<S> conj(const MVec3<S>& x) {
  return {{conj(x[0]), conj(x[1]), conj(x[2])}};
}

// --- ℝ⁶ embedding ---------------------------------------------------------
// Coordinate order (x, t_x, y, t_y, z, t_z); αe + βi ↦ [[α, β], [β, α]].

template <Scalar S>
using RVec6 = std::array<S, 6>;

template <Scalar S>
using RMat6 = std::array<std::array<S, 6>, 6>;

template <Scalar S>
RVec6<S> embed_vec(const MVec3<S>& x) {
  RVec6<S> v;
  for (int k = 0; k < 3; ++k) {
    v[2 * k] = x[k].re;
    v[2 * k + 1] = x[k].im;
  }
  return v;
}

template <Scalar S>
RMat6<S> embed_mat(const MMat3<S>& A) {
  RMat6<S> m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const MNum<S>& z = A(r, c);
      m[2 * r][2 * c] = z.re;
      m[2 * r][2 * c + 1] = z.im;
      m[2 * r + 1][2 * c] = z.im;
      m[2 * r + 1][2 * c + 1] = z.re;
    }
  }
  return m;
}

template <Scalar S>
RMat6<S> mat6_mul(const RMat6<S>& a, const RMat6<S>& b) {
  RMat6<S> out;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      S acc(0);
      for (int k = 0; k < 6; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

template <Scalar S>
RVec6<S> mat6_apply(const RMat6<S>& a, const RVec6<S>& x) {
  RVec6<S> out;
  for (int i = 0; i < 6; ++i) {
    S acc(0);
    for (int k = 0; k < 6; ++k) acc += a[i][k] * x[k];
    out[i] = acc;
  }
  return out;
}

/// Max-norm comparison of two 𝕄-vectors.
template <Scalar S>
Residual<S> compare(const MVec3<S>& lhs, const MVec3<S>& rhs) {
  Residual<S> r;
  for (int k = 0; k < 3; ++k) {
    r.absorb(lhs[k].re, rhs[k].re);
    r.absorb(lhs[k].im, rhs[k].im);
  }
  return r;
}

template <Scalar S>
Residual<S> compare(const MMat3<S>& lhs, const MMat3<S>& rhs) {
  Residual<S> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.absorb(lhs(i, j).re, rhs(i, j).re);
      r.absorb(lhs(i, j).im, rhs(i, j).im);
    }
  }
  return r;
}

}  // namespace mrel
