#pragma once

// Classical boost Λ and its 𝕄 replacement L.
//
// Λ is applied in real form on (x, y, z, ct). The imaginary-time matrix acting
// on (x, y, z, cti) is also available (classical_lambda_complex) for conjugating
// rank-2 tensors; the two agree entrywise once the factor i is pulled out of the
// time component.

#include <array>

#include "mrel/errors.hpp"
#include "mrel/mlinalg.hpp"

namespace mrel {

template <Scalar S>
using Vec3 = std::array<S, 3>;

template <Scalar S>
S dot3(const Vec3<S>& a, const Vec3<S>& b) {
  return S(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

/// Frame velocity in units of c: speed ratio β, direction cosines α, Lorentz factor γ.
template <Scalar S>
class Velocity {
public:
  static Velocity from_components(const Vec3<S>& v, const S& c = S(1)) {
    const S beta2 = dot3(v, v);
    if (beta2 == 0) throw InvalidVelocity("zero velocity has no direction");
    const S beta = ScalarTraits<S>::sqrt(beta2);
    Vec3<S> alpha{S(v[0] / beta), S(v[1] / beta), S(v[2] / beta)};
    return Velocity(beta, alpha, c);
  }

  static Velocity from_beta_direction(const S& beta, const Vec3<S>& alpha, const S& c = S(1)) {
    const S n = dot3(alpha, alpha);
    if (!near<S>(n, S(1), 1e-12)) throw InvalidVelocity("direction cosines are not a unit vector");
    return Velocity(beta, alpha, c);
  }

  const S& beta() const { return beta_; }
  const S& gamma() const { return gamma_; }
  const Vec3<S>& alpha() const { return alpha_; }
  const S& c() const { return c_; }
  Vec3<S> components() const { return {S(beta_ * alpha_[0]), S(beta_ * alpha_[1]), S(beta_ * alpha_[2])}; }

  /// Same speed, opposite direction.
  Velocity reversed() const {
    return Velocity(beta_, {S(-alpha_[0]), S(-alpha_[1]), S(-alpha_[2])}, c_);
  }

private:
  Velocity(const S& beta, const Vec3<S>& alpha, const S& c) : beta_(beta), alpha_(alpha), c_(c) {
    if (!(beta > 0) || !(beta < 1)) throw InvalidVelocity("speed ratio must lie in (0, 1)");
    if (!(c > 0)) throw InvalidVelocity("light speed must be positive");
    const S one_minus = S(1) - beta * beta;
    gamma_ = S(1) / ScalarTraits<S>::sqrt(one_minus);
  }

  S beta_;
  S gamma_;
  Vec3<S> alpha_;
  S c_;
};

/// Spacetime event (x, y, z, t).
template <Scalar S>
struct Event4 {
  S x{0}, y{0}, z{0}, t{0};

  Vec3<S> space() const { return {x, y, z}; }
  friend bool operator==(const Event4&, const Event4&) = default;
};

/// Four-vector in real form: spatial part and time-like component (ct, ρ, E, ...).
template <Scalar S>
struct FourVec {
  Vec3<S> space{};
  S time{0};
};

/// r' = r + (γ−1)α(α·r) − γβα·w,  w' = γ(w − β α·r).
template <Scalar S>
FourVec<S> boost_four(const FourVec<S>& u, const Velocity<S>& w) {
  const Vec3<S>& a = w.alpha();
  const S g = w.gamma();
  const S b = w.beta();
  const S ar = dot3(a, u.space);
  FourVec<S> out;
  for (int k = 0; k < 3; ++k) {
    out.space[k] = u.space[k] + (g - 1) * a[k] * ar - g * b * a[k] * u.time;
  }
  out.time = g * (u.time - b * ar);
  return out;
}

template <Scalar S>
Event4<S> classical_boost(const Event4<S>& ev, const Velocity<S>& w) {
  const FourVec<S> out = boost_four<S>({ev.space(), S(w.c() * ev.t)}, w);
  return {out.space[0], out.space[1], out.space[2], S(out.time / w.c())};
}

/// Real 4×4 Λ acting on (x, y, z, ct).
template <Scalar S>
std::array<std::array<S, 4>, 4> classical_lambda_real(const Velocity<S>& w) {
  std::array<std::array<S, 4>, 4> m;
  const Vec3<S>& a = w.alpha();
  const S g = w.gamma();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = S((r == c ? 1 : 0) + (g - 1) * a[r] * a[c]);
    m[r][3] = S(-w.beta() * g * a[r]);
    m[3][r] = S(-w.beta() * g * a[r]);
  }
  m[3][3] = g;
  return m;
}

/// Complex number over S, used only for the imaginary-time classical matrices.
template <Scalar S>
struct CNum {
  S re{0};
  S im{0};

  friend CNum operator+(const CNum& a, const CNum& b) { return {S(a.re + b.re), S(a.im + b.im)}; }
  friend CNum operator-(const CNum& a, const CNum& b) { return {S(a.re - b.re), S(a.im - b.im)}; }
  friend CNum operator*(const CNum& a, const CNum& b) {
    return {S(a.re * b.re - a.im * b.im), S(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const CNum&, const CNum&) = default;
};

template <Scalar S>
using CMat4 = std::array<std::array<CNum<S>, 4>, 4>;

template <Scalar S>
CMat4<S> cmat4_mul(const CMat4<S>& a, const CMat4<S>& b) {
  CMat4<S> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CNum<S> acc;
      for (int k = 0; k < 4; ++k) acc = acc + a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

/// Λ acting on (x, y, z, cti): time column +βγα_k i, time row −βγα_k i.
template <Scalar S>
CMat4<S> classical_lambda_complex(const Velocity<S>& w) {
  CMat4<S> m;
  const Vec3<S>& a = w.alpha();
  const S g = w.gamma();
  const S bg = w.beta() * g;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = {S((r == c ? 1 : 0) + (g - 1) * a[r] * a[c]), S(0)};
    m[r][3] = {S(0), S(bg * a[r])};
    m[3][r] = {S(0), S(-bg * a[r])};
  }
  m[3][3] = {g, S(0)};
  return m;
}

// --- 𝕄 representation ----------------------------------------------------

/// Event in 𝕄³ together with the direction cosines used for its time parts.
template <Scalar S>
struct MEvent {
  MVec3<S> vec;
  Vec3<S> alpha{};

  friend bool operator==(const MEvent&, const MEvent&) = default;
};

/// The 𝕄-Lorentz matrix and the direction it was built for.
template <Scalar S>
struct MLorentz {
  MMat3<S> matrix;
  Vec3<S> alpha{};
};

/// Component k = x_k e + (α_k c t) i.
template <Scalar S>
MEvent<S> build_m_event(const Event4<S>& ev, const Velocity<S>& w) {
  const Vec3<S> r = ev.space();
  const S ct = w.c() * ev.t;
  MEvent<S> out;
  out.alpha = w.alpha();
  for (int k = 0; k < 3; ++k) out.vec[k] = {r[k], S(w.alpha()[k] * ct)};
  return out;
}

/// L_ij = [δ_ij + (γ−1)α_iα_j] e − [βγ α_iα_j] i.
template <Scalar S>
MLorentz<S> build_L(const Velocity<S>& w) {
  MLorentz<S> L;
  L.alpha = w.alpha();
  const Vec3<S>& a = w.alpha();
  const S g = w.gamma();
  const S bg = w.beta() * g;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      L.matrix(i, j) = {S((i == j ? 1 : 0) + (g - 1) * a[i] * a[j]), S(-bg * a[i] * a[j])};
    }
  }
  return L;
}

namespace detail {
template <Scalar S>
void require_same_alpha(const Vec3<S>& a, const Vec3<S>& b) {
  for (int k = 0; k < 3; ++k) {
    if (!near<S>(a[k], b[k], 1e-12)) throw AlphaMismatch("event and matrix use different directions");
  }
}
}  // namespace detail

template <Scalar S>
MEvent<S> transform(const MLorentz<S>& L, const MEvent<S>& x) {
  detail::require_same_alpha(L.alpha, x.alpha);
  return {dot_mv(L.matrix, x.vec), x.alpha};
}

/// |L·x − x'_classical| for the event represented with respect to w.
template <Scalar S>
Residual<S> consistency_residual(const Event4<S>& ev, const Velocity<S>& w) {
  const MEvent<S> via_m = transform(build_L(w), build_m_event(ev, w));
  const MEvent<S> via_classical = build_m_event(classical_boost(ev, w), w);
  return compare(via_m.vec, via_classical.vec);
}

/// Representation of the primed event with respect to the reversed velocity: (x')*.
template <Scalar S>
MEvent<S> reverse_representation(const MEvent<S>& xp) {
  return {conj(xp.vec), {S(-xp.alpha[0]), S(-xp.alpha[1]), S(-xp.alpha[2])}};
}

/// Undoes transform: conj(L·conj(x')).
template <Scalar S>
MEvent<S> invert_event(const MLorentz<S>& L, const MEvent<S>& xp) {
  detail::require_same_alpha(L.alpha, xp.alpha);
  return {conj(dot_mv(L.matrix, conj(xp.vec))), xp.alpha};
}

/// Relativistic composition: velocity of C relative to A when B moves with u
/// relative to A and C moves with v relative to B.
Velocity<double> compose_velocities(const Velocity<double>& u, const Velocity<double>& v);

/// ‖L_BC·(L_AB·x_AB) − x_AC‖ with x_AC built from the classical double boost and
/// the composed velocity's direction.
double composition_gap(const Velocity<double>& w_ab, const Velocity<double>& w_bc, const Event4<double>& ev);

}  // namespace mrel
