#pragma once

// Seeded generators for the verification suites and the tests.

#include <vector>

#include "mrel/fieldcalc.hpp"
#include "mrel/rng.hpp"

namespace mrel {

/// Speed ratios whose Lorentz factor is rational.
const std::vector<Rational>& pythagorean_betas();

/// Rational point on the unit sphere, via inverse stereographic projection.
Vec3<Rational> rational_unit_direction(Rng& rng);

template <Scalar S>
MNum<S> random_mnum(Rng& rng) {
  S re = rng.scalar<S>();
  S im = rng.scalar<S>();
  return {re, im};
}

template <Scalar S>
MVec3<S> random_mvec(Rng& rng) {
  MVec3<S> v;
  for (int k = 0; k < 3; ++k) v[k] = random_mnum<S>(rng);
  return v;
}

template <Scalar S>
MMat3<S> random_mmat(Rng& rng) {
  MMat3<S> m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = random_mnum<S>(rng);
  return m;
}

template <Scalar S>
Vec3<S> random_vec3(Rng& rng, double range = 2.0) {
  S a = rng.scalar<S>(range);
  S b = rng.scalar<S>(range);
  S c = rng.scalar<S>(range);
  return {a, b, c};
}

/// Exact mode: a β from `betas` along a rational unit direction.
/// Float mode: uniform direction, β uniform in [0.05, beta_max].
template <Scalar S>
Velocity<S> random_velocity(Rng& rng, const std::vector<Rational>& betas, double beta_max = 0.95) {
  if constexpr (is_exact_v<S>) {
    const Rational& beta = betas[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(betas.size()) - 1))];
    return Velocity<S>::from_beta_direction(beta, rational_unit_direction(rng));
  } else {
    Vec3<double> d;
    double n2 = 0.0;
    do {
      d = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      n2 = dot3(d, d);
    } while (n2 < 1e-4 || n2 > 1.0);
    const double n = std::sqrt(n2);
    const double beta = rng.uniform(0.05, beta_max);
    return Velocity<S>::from_components({beta * d[0] / n, beta * d[1] / n, beta * d[2] / n});
  }
}

template <Scalar S>
Event4<S> random_event(Rng& rng) {
  Event4<S> ev;
  ev.x = rng.scalar<S>();
  ev.y = rng.scalar<S>();
  ev.z = rng.scalar<S>();
  ev.t = rng.scalar<S>();
  return ev;
}

template <Scalar S>
ChargeCurrent<S> random_charge_current(Rng& rng) {
  ChargeCurrent<S> cc;
  cc.j = random_vec3<S>(rng);
  cc.rho = rng.scalar<S>();
  return cc;
}

template <Scalar S>
EMField<S> random_em_field(Rng& rng) {
  EMField<S> f;
  f.E = random_vec3<S>(rng);
  f.B = random_vec3<S>(rng);
  return f;
}

template <Scalar S>
AngMomState<S> random_angmom_state(Rng& rng) {
  AngMomState<S> s;
  s.r = random_vec3<S>(rng);
  s.t = rng.scalar<S>();
  s.P = random_vec3<S>(rng);
  s.energy = rng.scalar<S>();
  return s;
}

/// c0 + c·p + ¼ Σ_{i≤j} q_ij p_i p_j + a·sin(k·p + φ), coefficients in [−1, 1].
struct SmoothScalar4 {
  double c0 = 0.0;
  std::array<double, 4> lin{};
  std::array<double, 10> quad{};
  double amp = 0.0;
  std::array<double, 4> wave{};
  double phase = 0.0;

  static SmoothScalar4 random(Rng& rng);
  double operator()(const Point4& p) const;
};

EMFieldFn random_em_field_fn(Rng& rng);
ChargeCurrentFn random_charge_current_fn(Rng& rng);

/// E = ê·amp·sin(κ(k̂·r − t) + φ), B = k̂ × E with ê ⊥ k̂; solves the vacuum equations.
EMFieldFn random_plane_wave(Rng& rng);

/// s(r, t) = s0 + a·sin(k r + m t + φ) + b·cos(n r − q t), |s| ≤ 0.8.
SpeedProfileFn random_speed_profile(Rng& rng);

/// Uniform unit vector (float).
Vec3<double> random_unit(Rng& rng);

}  // namespace mrel
