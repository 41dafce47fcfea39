#include "mrel/sampling.hpp"

#include <cmath>

namespace mrel {

const std::vector<Rational>& pythagorean_betas() {
  static const std::vector<Rational> betas{Rational(3, 5), Rational(5, 13), Rational(8, 17), Rational(20, 29)};
  return betas;
}

Vec3<Rational> rational_unit_direction(Rng& rng) {
  const Rational a = rng.rational(6, 5);
  const Rational b = rng.rational(6, 5);
  const Rational n = 1 + a * a + b * b;
  Vec3<Rational> d{Rational(2 * a / n), Rational(2 * b / n), Rational((1 - a * a - b * b) / n)};
  // Permute so that no axis is favoured.
  const long rot = rng.int_in(0, 2);
  for (long k = 0; k < rot; ++k) d = {d[1], d[2], d[0]};
  if (rng.int_in(0, 1) == 1) d[2] = -d[2];
  return d;
}

SmoothScalar4 SmoothScalar4::random(Rng& rng) {
  SmoothScalar4 f;
  f.c0 = rng.uniform(-1, 1);
  for (double& c : f.lin) c = rng.uniform(-1, 1);
  for (double& c : f.quad) c = rng.uniform(-1, 1);
  f.amp = rng.uniform(-1, 1);
  for (double& c : f.wave) c = rng.uniform(-1, 1);
  f.phase = rng.uniform(0, 6.283185307179586);
  return f;
}

double SmoothScalar4::operator()(const Point4& p) const {
  double v = c0;
  double arg = phase;
  for (int i = 0; i < 4; ++i) {
    v += lin[i] * p[i];
    arg += wave[i] * p[i];
  }
  int idx = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) v += 0.25 * quad[idx++] * p[i] * p[j];
  return v + amp * std::sin(arg);
}

EMFieldFn random_em_field_fn(Rng& rng) {
  std::array<SmoothScalar4, 6> parts;
  for (auto& p : parts) p = SmoothScalar4::random(rng);
  return [parts](const Point4& q) {
    EMField<double> f;
    for (int k = 0; k < 3; ++k) {
      f.E[k] = parts[k](q);
      f.B[k] = parts[3 + k](q);
    }
    return f;
  };
}

ChargeCurrentFn random_charge_current_fn(Rng& rng) {
  std::array<SmoothScalar4, 4> parts;
  for (auto& p : parts) p = SmoothScalar4::random(rng);
  return [parts](const Point4& q) {
    ChargeCurrent<double> cc;
    for (int k = 0; k < 3; ++k) cc.j[k] = parts[k](q);
    cc.rho = parts[3](q);
    return cc;
  };
}

Vec3<double> random_unit(Rng& rng) {
  Vec3<double> d;
  double n2 = 0.0;
  do {
    d = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    n2 = dot3(d, d);
  } while (n2 < 1e-4 || n2 > 1.0);
  const double n = std::sqrt(n2);
  return {d[0] / n, d[1] / n, d[2] / n};
}

namespace {

Vec3<double> cross(const Vec3<double>& a, const Vec3<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

EMFieldFn random_plane_wave(Rng& rng) {
  const Vec3<double> k = random_unit(rng);
  Vec3<double> e = cross(k, random_unit(rng));
  while (dot3(e, e) < 1e-4) e = cross(k, random_unit(rng));
  const double n = std::sqrt(dot3(e, e));
  e = {e[0] / n, e[1] / n, e[2] / n};
  const double amp = rng.uniform(0.2, 1.5);
  const double kappa = rng.uniform(0.3, 1.5);
  const double phase = rng.uniform(0, 6.283185307179586);
  return [k, e, amp, kappa, phase](const Point4& p) {
    const double s = amp * std::sin(kappa * (k[0] * p[0] + k[1] * p[1] + k[2] * p[2] - p[3]) + phase);
    EMField<double> f;
    f.E = {e[0] * s, e[1] * s, e[2] * s};
    f.B = cross(k, f.E);
    return f;
  };
}

SpeedProfileFn random_speed_profile(Rng& rng) {
  const double s0 = rng.uniform(-0.4, 0.4);
  const double a = rng.uniform(0, 0.2);
  const double b = rng.uniform(0, 0.2);
  const double k = rng.uniform(-1.5, 1.5), m = rng.uniform(-1.5, 1.5);
  const double n = rng.uniform(-1.5, 1.5), q = rng.uniform(-1.5, 1.5);
  const double phase = rng.uniform(0, 6.283185307179586);
  return [=](double r, double t) { return s0 + a * std::sin(k * r + m * t + phase) + b * std::cos(n * r - q * t); };
}

}  // namespace mrel
