#pragma once

// Physical entities in classical and 𝕄 form: current-charge density, the
// electromagnetic field (vector and rank-2 tensor, plus its E↔B dual) and the
// angular-momentum tensor. Entity formulas use c = 1 units.

#include <array>

#include "mrel/lorentz.hpp"

namespace mrel {

template <Scalar S>
struct ChargeCurrent {
  Vec3<S> j{};
  S rho{0};
};

template <Scalar S>
struct EMField {
  Vec3<S> E{};
  Vec3<S> B{};
};

template <Scalar S>
struct AngMomState {
  Vec3<S> r{};  // position
  S t{0};
  Vec3<S> P{};  // momentum components
  S energy{0};
};

// --- current-charge density ------------------------------------------------

/// δ_k = j_k e + α_k ρ i.
template <Scalar S>
MVec3<S> build_delta(const ChargeCurrent<S>& cc, const Velocity<S>& w) {
  MVec3<S> out;
  for (int k = 0; k < 3; ++k) out[k] = {cc.j[k], S(w.alpha()[k] * cc.rho)};
  return out;
}

template <Scalar S>
ChargeCurrent<S> classical_cc_boost(const ChargeCurrent<S>& cc, const Velocity<S>& w) {
  const FourVec<S> out = boost_four<S>({cc.j, cc.rho}, w);
  return {out.space, out.time};
}

template <Scalar S>
Residual<S> delta_consistency(const ChargeCurrent<S>& cc, const Velocity<S>& w) {
  const MVec3<S> lhs = dot_mv(build_L(w).matrix, build_delta(cc, w));
  const MVec3<S> rhs = build_delta(classical_cc_boost(cc, w), w);
  return compare(lhs, rhs);
}

// --- electromagnetic field -------------------------------------------------

/// The field vector 𝓕⃗, component by component as displayed (real parts linear
/// in B, imaginary parts quadratic in α and linear in E).
template <Scalar S>
MVec3<S> build_em_vector(const EMField<S>& f, const Vec3<S>& alpha) {
  const S &ax = alpha[0], &ay = alpha[1], &az = alpha[2];
  const S &Ex = f.E[0], &Ey = f.E[1], &Ez = f.E[2];
  const S &Bx = f.B[0], &By = f.B[1], &Bz = f.B[2];
  MVec3<S> v;
  v[0].re = ax * (By + Bz) + ay * By + az * Bz;
  v[0].im = ax * ax * (Ey - Ez) + ay * ay * Ey - az * az * Ez - ax * ay * Ez + ax * az * Ey + ay * az * (Ez - Ey);
  v[1].re = -ax * Bx + ay * (Bz - Bx) - az * Bz;
  v[1].im = -ax * ax * Ex - ay * ay * (Ex + Ez) - az * az * Ez - ax * ay * Ez - ax * az * (Ex + Ez) + ay * az * Ex;
  v[2].re = -ax * Bx - ay * By - az * (Bx - By);
  v[2].im = ax * ax * Ex + ay * ay * Ey + az * az * (Ex + Ey) + ax * ay * (Ex + Ey) + ax * az * Ey - ay * az * Ex;
  return v;
}

template <Scalar S>
MVec3<S> build_em_vector(const EMField<S>& f, const Velocity<S>& w) {
  return build_em_vector(f, w.alpha());
}

/// Classical F with imaginary-time convention: spatial block from B, time
/// column −E_k i, time row +E_k i.
template <Scalar S>
CMat4<S> classical_F(const EMField<S>& f) {
  CMat4<S> m;
  const Vec3<S>& B = f.B;
  m[0][1] = {B[2], S(0)};
  m[0][2] = {S(-B[1]), S(0)};
  m[1][0] = {S(-B[2]), S(0)};
  m[1][2] = {B[0], S(0)};
  m[2][0] = {B[1], S(0)};
  m[2][1] = {S(-B[0]), S(0)};
  for (int k = 0; k < 3; ++k) {
    m[k][3] = {S(0), S(-f.E[k])};
    m[3][k] = {S(0), f.E[k]};
  }
  return m;
}

/// Reads (E, B) back from a matrix of F's shape; throws SkewStructureBroken
/// if any entry departs from that shape (beyond 1e−9·scale in float mode).
template <Scalar S>
EMField<S> read_classical_F(const CMat4<S>& m) {
  EMField<S> f;
  f.B = {m[1][2].re, m[2][0].re, m[0][1].re};
  for (int k = 0; k < 3; ++k) f.E[k] = m[3][k].im;
  const CMat4<S> expect = classical_F(f);
  Residual<S> r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      r.absorb(m[i][j].re, expect[i][j].re);
      r.absorb(m[i][j].im, expect[i][j].im);
    }
  }
  if (!r.within(1e-9)) throw SkewStructureBroken("boosted field tensor is not of the E/B form");
  return f;
}

/// F' = Λ F Λ⁻¹ with Λ⁻¹ = Λ(−v).
template <Scalar S>
EMField<S> classical_F_boost(const EMField<S>& f, const Velocity<S>& w) {
  const CMat4<S> lam = classical_lambda_complex(w);
  const CMat4<S> lam_inv = classical_lambda_complex(w.reversed());
  return read_classical_F(cmat4_mul(cmat4_mul(lam, classical_F(f)), lam_inv));
}

template <Scalar S>
Residual<S> compare(const EMField<S>& a, const EMField<S>& b) {
  Residual<S> r;
  for (int k = 0; k < 3; ++k) {
    r.absorb(a.E[k], b.E[k]);
    r.absorb(a.B[k], b.B[k]);
  }
  return r;
}

template <Scalar S>
Residual<S> em_vector_consistency(const EMField<S>& f, const Velocity<S>& w) {
  const MVec3<S> lhs = dot_mv(build_L(w).matrix, build_em_vector(f, w));
  const MVec3<S> rhs = build_em_vector(classical_F_boost(f, w), w);
  return compare(lhs, rhs);
}

/// Antisymmetric 𝕄-tensor 𝓕 (or the dual 𝓕₁ with E and B interchanged):
///   𝓕_12 = B_z e + (α_x E_y − α_y E_x) i,   𝓕₁_12 = −E_z e + (α_x B_y − α_y B_x) i.
template <Scalar S>
MMat3<S> build_em_tensor(const EMField<S>& f, const Vec3<S>& alpha, bool dual) {
  // Real parts come from `axial` (B, or −E for the dual); imaginary parts from `polar`.
  Vec3<S> axial = f.B;
  Vec3<S> polar = f.E;
  if (dual) {
    axial = {S(-f.E[0]), S(-f.E[1]), S(-f.E[2])};
    polar = f.B;
  }
  auto im = [&](int i, int j) { return S(alpha[i] * polar[j] - alpha[j] * polar[i]); };
  MMat3<S> m;
  m(0, 1) = {axial[2], im(0, 1)};
  m(0, 2) = {S(-axial[1]), im(0, 2)};
  m(1, 2) = {axial[0], im(1, 2)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) m(i, j) = -m(j, i);
  }
  return m;
}

template <Scalar S>
MMat3<S> build_em_tensor(const EMField<S>& f, const Velocity<S>& w, bool dual) {
  return build_em_tensor(f, w.alpha(), dual);
}

/// T' = (L·T)·L.
template <Scalar S>
MMat3<S> tensor_transform(const MMat3<S>& L, const MMat3<S>& T) {
  return dot_mm(dot_mm(L, T), L);
}

template <Scalar S>
Residual<S> em_tensor_consistency(const EMField<S>& f, const Velocity<S>& w, bool dual) {
  const MMat3<S> lhs = tensor_transform(build_L(w).matrix, build_em_tensor(f, w, dual));
  const MMat3<S> rhs = build_em_tensor(classical_F_boost(f, w), w, dual);
  return compare(lhs, rhs);
}

// --- angular momentum --------------------------------------------------------

/// 𝓙_ij = (x_i P_j − x_j P_i) e + [α_j(x_i E − P_i t) − α_i(x_j E − P_j t)] i.
template <Scalar S>
MMat3<S> build_angmom_tensor(const AngMomState<S>& s, const Vec3<S>& alpha) {
  Vec3<S> q;
  for (int k = 0; k < 3; ++k) q[k] = s.r[k] * s.energy - s.P[k] * s.t;
  MMat3<S> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      m(i, j) = {S(s.r[i] * s.P[j] - s.r[j] * s.P[i]), S(alpha[j] * q[i] - alpha[i] * q[j])};
    }
  }
  return m;
}

template <Scalar S>
MMat3<S> build_angmom_tensor(const AngMomState<S>& s, const Velocity<S>& w) {
  return build_angmom_tensor(s, w.alpha());
}

/// Classical J = x pᵀ − p xᵀ with x = (r, t i), p = (P, E i).
template <Scalar S>
CMat4<S> classical_J(const AngMomState<S>& s) {
  std::array<CNum<S>, 4> x, p;
  for (int k = 0; k < 3; ++k) {
    x[k] = {s.r[k], S(0)};
    p[k] = {s.P[k], S(0)};
  }
  x[3] = {S(0), s.t};
  p[3] = {S(0), s.energy};
  CMat4<S> m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = x[i] * p[j] - p[i] * x[j];
  }
  return m;
}

/// Boosts position (r, t) and momentum (P, E) as four-vectors.
template <Scalar S>
AngMomState<S> classical_angmom_boost(const AngMomState<S>& s, const Velocity<S>& w) {
  const FourVec<S> x = boost_four<S>({s.r, s.t}, w);
  const FourVec<S> p = boost_four<S>({s.P, s.energy}, w);
  return {x.space, x.time, p.space, p.time};
}

/// Max of two residuals: ΛJΛ⁻¹ against J rebuilt from the boosted state, and
/// L·𝓙·L against 𝓙 rebuilt from the boosted state.
template <Scalar S>
Residual<S> angmom_consistency(const AngMomState<S>& s, const Velocity<S>& w) {
  const AngMomState<S> sp = classical_angmom_boost(s, w);

  const CMat4<S> lam = classical_lambda_complex(w);
  const CMat4<S> lam_inv = classical_lambda_complex(w.reversed());
  const CMat4<S> jp = cmat4_mul(cmat4_mul(lam, classical_J(s)), lam_inv);
  const CMat4<S> jp_rebuilt = classical_J(sp);
  Residual<S> classical;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      classical.absorb(jp[i][j].re, jp_rebuilt[i][j].re);
      classical.absorb(jp[i][j].im, jp_rebuilt[i][j].im);
    }
  }

  const MMat3<S> lhs = tensor_transform(build_L(w).matrix, build_angmom_tensor(s, w));
  Residual<S> r = compare(lhs, build_angmom_tensor(sp, w));
  r.merge(classical);
  return r;
}

/// entry(i,j) = −entry(j,i) with a zero diagonal.
template <Scalar S>
bool is_antisymmetric(const MMat3<S>& m, double tol = 0.0) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const MNum<S> sum = m(i, j) + m(j, i);
      if (!near<S>(sum.re, S(0), tol) || !near<S>(sum.im, S(0), tol)) return false;
    }
  }
  return true;
}

}  // namespace mrel
