#include "mrel/fieldcalc.hpp"

#include <cmath>
#include <utility>

namespace mrel {

namespace {

constexpr int kSpace[3] = {kX, kY, kZ};
constexpr int kTime[3] = {kTx, kTy, kTz};

double component(const MField& F, const Point6& p, int k, bool imag) {
  const MNum<double> v = F.eval(p)[k];
  return imag ? v.im : v.re;
}

double d6(const MField& F, int k, bool imag, int var, const Point6& p, const FDConfig& cfg) {
  return fd_partial(
      [&](const Point6& q) { return component(F, q, k, imag); }, var, p, cfg);
}

double d6(const ATensorField& T, int slot, int var, const Point6& p, const FDConfig& cfg) {
  return fd_partial([&](const Point6& q) { return T.eval(q)[slot]; }, var, p, cfg);
}

// ∂/∂(var) of one scalar extracted from a spacetime field.
template <class Fn>
double d4(const Fn& fn, int var, const Point4& p, const FDConfig& cfg) {
  return fd_partial(fn, var, p, cfg);
}

double dE(const EMFieldFn& f, int k, int var, const Point4& p, const FDConfig& cfg) {
  return d4([&](const Point4& q) { return f(q).E[k]; }, var, p, cfg);
}

double dB(const EMFieldFn& f, int k, int var, const Point4& p, const FDConfig& cfg) {
  return d4([&](const Point4& q) { return f(q).B[k]; }, var, p, cfg);
}

void require_alpha(const RestrictedPoint& p, const Velocity<double>& w) {
  for (int k = 0; k < 3; ++k) {
    if (std::fabs(p.alpha()[k] - w.alpha()[k]) > 1e-12) {
      throw NotRestricted("point is restricted along a different direction than the velocity");
    }
  }
}

double weighted(const std::array<double, 3>& w, const std::array<double, 3>& v) {
  return w[0] * v[0] + w[1] * v[1] + w[2] * v[2];
}

constexpr int kT = 3;  // index of t in Point4

}  // namespace

void FDConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("finite-difference step must be positive");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ConfigError("tolerance must be positive");
  if (order != 2 && order != 4) throw ConfigError("finite-difference order must be 2 or 4");
}

Point4 to_spacetime(const Point6& p) {
  return {p[kX], p[kY], p[kZ], std::sqrt(p[kTx] * p[kTx] + p[kTy] * p[kTy] + p[kTz] * p[kTz])};
}

std::pair<double, double> radial_coordinates(const Point6& p) {
  const double r = std::sqrt(p[kX] * p[kX] + p[kY] * p[kY] + p[kZ] * p[kZ]);
  const double t = std::sqrt(p[kTx] * p[kTx] + p[kTy] * p[kTy] + p[kTz] * p[kTz]);
  return {r, t};
}

MField lift_delta(ChargeCurrentFn cc, const Vec3<double>& alpha) {
  return {[cc = std::move(cc), alpha](const Point6& p) {
            const ChargeCurrent<double> v = cc(to_spacetime(p));
            MVec3<double> out;
            for (int k = 0; k < 3; ++k) out[k] = {v.j[k], alpha[k] * v.rho};
            return out;
          },
          true};
}

MField lift_em_vector(EMFieldFn f, const Vec3<double>& alpha) {
  return {[f = std::move(f), alpha](const Point6& p) { return build_em_vector(f(to_spacetime(p)), alpha); }, true};
}

MField lift_sigma(SpeedProfileFn s, const Vec3<double>& alpha) {
  return {[s = std::move(s), alpha](const Point6& p) {
            const auto [r, t] = radial_coordinates(p);
            const double speed = s(r, t);
            if (!(std::fabs(speed) < 1.0)) throw Superluminal("speed profile reached |s| >= 1");
            const double gamma = 1.0 / std::sqrt(1.0 - speed * speed);
            MVec3<double> out;
            for (int k = 0; k < 3; ++k) out[k] = {gamma * alpha[k] * speed, gamma * alpha[k]};
            return out;
          },
          true};
}

ATensorField lift_em_tensor(EMFieldFn f, const Vec3<double>& alpha, bool dual) {
  return {[f = std::move(f), alpha, dual](const Point6& p) {
    const MMat3<double> m = build_em_tensor(f(to_spacetime(p)), alpha, dual);
    return std::array<double, 6>{m(0, 1).re, m(0, 2).re, m(1, 2).re, m(0, 1).im, m(0, 2).im, m(1, 2).im};
  }};
}

double a1_sum(const MField& F, const Point6& p, const FDConfig& cfg) {
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    sum += d6(F, k, false, kSpace[k], p, cfg) + d6(F, k, true, kTime[k], p, cfg);
  }
  return sum;
}

double a2_sum(const MField& F, const Point6& p, const FDConfig& cfg) {
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    sum += d6(F, k, false, kTime[k], p, cfg) + d6(F, k, true, kSpace[k], p, cfg);
  }
  return sum;
}

namespace {
enum Slot { kT12 = 0, kT13, kT23, kS12, kS13, kS23 };
}

double a3_sum(const ATensorField& T, const Point6& p, const FDConfig& cfg) {
  return (d6(T, kT12, kZ, p, cfg) - d6(T, kS12, kTz, p, cfg)) - (d6(T, kT13, kY, p, cfg) - d6(T, kS13, kTy, p, cfg)) +
         (d6(T, kT23, kX, p, cfg) - d6(T, kS23, kTx, p, cfg));
}

double a4_sum(const ATensorField& T, const Point6& p, const FDConfig& cfg) {
  return (d6(T, kT12, kTz, p, cfg) - d6(T, kS12, kZ, p, cfg)) - (d6(T, kT13, kTy, p, cfg) - d6(T, kS13, kY, p, cfg)) +
         (d6(T, kT23, kTx, p, cfg) - d6(T, kS23, kX, p, cfg));
}

std::pair<double, double> cr_residual(const std::function<double(double, double)>& u,
                                      const std::function<double(double, double)>& v,
                                      const std::array<double, 2>& p, const FDConfig& cfg) {
  using P2 = std::array<double, 2>;
  auto U = [&](const P2& q) { return u(q[0], q[1]); };
  auto V = [&](const P2& q) { return v(q[0], q[1]); };
  const double ux = fd_partial(U, 0, p, cfg);
  const double uy = fd_partial(U, 1, p, cfg);
  const double vx = fd_partial(V, 0, p, cfg);
  const double vy = fd_partial(V, 1, p, cfg);
  return {ux + vy, uy + vx};
}

CurlResiduals curl_residuals(const EMFieldFn& f, const Point4& p, const FDConfig& cfg) {
  enum { x = 0, y = 1, z = 2 };
  CurlResiduals r;
  r.faraday[0] = dE(f, y, z, p, cfg) - dE(f, z, y, p, cfg) - dB(f, x, kT, p, cfg);
  r.faraday[1] = dE(f, z, x, p, cfg) - dE(f, x, z, p, cfg) - dB(f, y, kT, p, cfg);
  r.faraday[2] = dE(f, x, y, p, cfg) - dE(f, y, x, p, cfg) - dB(f, z, kT, p, cfg);
  r.ampere[0] = dB(f, z, x, p, cfg) - dB(f, x, z, p, cfg) + dE(f, y, kT, p, cfg);
  r.ampere[1] = dB(f, y, x, p, cfg) - dB(f, x, y, p, cfg) - dE(f, z, kT, p, cfg);
  r.ampere[2] = dB(f, z, y, p, cfg) - dB(f, y, z, p, cfg) - dE(f, x, kT, p, cfg);
  return r;
}

double divergence_E(const EMFieldFn& f, const Point4& p, const FDConfig& cfg) {
  return dE(f, 0, 0, p, cfg) + dE(f, 1, 1, p, cfg) + dE(f, 2, 2, p, cfg);
}

double divergence_B(const EMFieldFn& f, const Point4& p, const FDConfig& cfg) {
  return dB(f, 0, 0, p, cfg) + dB(f, 1, 1, p, cfg) + dB(f, 2, 2, p, cfg);
}

std::array<double, 3> curlB_weights(const Vec3<double>& a) {
  const double s = a[0] - a[1] - a[2];
  return {a[0] * s - 1.0, a[1] * s + 1.0, a[2] * s + 1.0};
}

std::array<double, 3> curlE_weights(const Vec3<double>& a) { return {a[0] + a[2], a[0] + a[1], a[1] - a[2]}; }

std::array<double, 3> curlE_permuted_weights(const Vec3<double>& a) {
  return {a[1] + a[0], a[1] + a[2], a[2] - a[0]};
}

// --- restricted points ------------------------------------------------------

RestrictedPoint RestrictedPoint::on_slice(const Point4& base, const Vec3<double>& alpha) {
  if (!(base[3] > 0.0)) throw NotRestricted("restricted points need t > 0");
  const double n = dot3(alpha, alpha);
  if (std::fabs(n - 1.0) > 1e-12) throw InvalidVelocity("direction cosines are not a unit vector");
  return RestrictedPoint(base, alpha, false);
}

RestrictedPoint RestrictedPoint::radial(double r, double t, const Vec3<double>& alpha) {
  if (!(r > 0.0)) throw NotRestricted("radial points need r > 0");
  RestrictedPoint p = on_slice({alpha[0] * r, alpha[1] * r, alpha[2] * r, t}, alpha);
  p.radial_ = true;
  return p;
}

RestrictedPoint RestrictedPoint::from_six(const Point6& six, const Vec3<double>& alpha, double tol) {
  const Point4 base = to_spacetime(six);
  RestrictedPoint p = on_slice(base, alpha);
  for (int k = 0; k < 3; ++k) {
    if (std::fabs(six[kTime[k]] - alpha[k] * base[3]) > tol * std::max(1.0, base[3])) {
      throw NotRestricted("t_{x_i} differs from alpha_i t");
    }
  }
  const double r = std::sqrt(base[0] * base[0] + base[1] * base[1] + base[2] * base[2]);
  bool radial = r > 0.0;
  for (int k = 0; k < 3 && radial; ++k) radial = std::fabs(base[k] - alpha[k] * r) <= tol * std::max(1.0, r);
  p.radial_ = radial;
  return p;
}

Point6 RestrictedPoint::six() const {
  return {base_[0], base_[1], base_[2], alpha_[0] * base_[3], alpha_[1] * base_[3], alpha_[2] * base_[3]};
}

// --- derivation identities ---------------------------------------------------

IdentitySides identity_a2_curlB(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                const FDConfig& cfg) {
  require_alpha(p, w);
  const double lhs = a2_sum(lift_em_vector(f, w.alpha()), p.six(), cfg);
  const CurlResiduals c = curl_residuals(f, p.base(), cfg);
  return {lhs, kCurlBSign * weighted(curlB_weights(w.alpha()), c.faraday)};
}

IdentitySides identity_a1_curlE(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                const FDConfig& cfg) {
  require_alpha(p, w);
  const double lhs = a1_sum(lift_em_vector(f, w.alpha()), p.six(), cfg);
  const CurlResiduals c = curl_residuals(f, p.base(), cfg);
  return {lhs, weighted(curlE_weights(w.alpha()), c.ampere)};
}

IdentitySides identity_a1_curlE_permuted(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                         const FDConfig& cfg) {
  require_alpha(p, w);
  const Vec3<double>& a = w.alpha();
  // Renamed axes: x̃ = y, ỹ = z, z̃ = x.
  EMFieldFn renamed = [f](const Point4& q) {
    const EMField<double> v = f({q[2], q[0], q[1], q[3]});
    return EMField<double>{{v.E[1], v.E[2], v.E[0]}, {v.B[1], v.B[2], v.B[0]}};
  };
  const Vec3<double> renamed_alpha{a[1], a[2], a[0]};
  const Point4& b = p.base();
  const RestrictedPoint renamed_point = RestrictedPoint::on_slice({b[1], b[2], b[0], b[3]}, renamed_alpha);
  const double lhs = a1_sum(lift_em_vector(renamed, renamed_alpha), renamed_point.six(), cfg);

  const CurlResiduals c = curl_residuals(f, b, cfg);
  const std::array<double, 3> terms{-c.ampere[1], c.ampere[2], -c.ampere[0]};
  return {lhs, weighted(curlE_permuted_weights(a), terms)};
}

IdentitySides a3_divergence(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p, bool dual,
                            const FDConfig& cfg) {
  require_alpha(p, w);
  const double lhs = a3_sum(lift_em_tensor(f, w.alpha(), dual), p.six(), cfg);
  const double rhs = dual ? kDivESign * divergence_E(f, p.base(), cfg) : kDivBSign * divergence_B(f, p.base(), cfg);
  return {lhs, rhs};
}

IdentitySides a4_translation(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p, bool dual,
                             const FDConfig& cfg) {
  require_alpha(p, w);
  const double lhs = a4_sum(lift_em_tensor(f, w.alpha(), dual), p.six(), cfg);
  const Point4& b = p.base();
  std::array<double, 3> terms;
  if (!dual) {
    const CurlResiduals c = curl_residuals(f, b, cfg);
    terms = c.faraday;
  } else {
    enum { x = 0, y = 1, z = 2 };
    terms[0] = dB(f, y, z, b, cfg) - dB(f, z, y, b, cfg) + dE(f, x, kT, b, cfg);
    terms[1] = dB(f, z, x, b, cfg) - dB(f, x, z, b, cfg) + dE(f, y, kT, b, cfg);
    terms[2] = dB(f, x, y, b, cfg) - dB(f, y, x, b, cfg) + dE(f, z, kT, b, cfg);
  }
  return {lhs, kCurlTensorSign * weighted(w.alpha(), terms)};
}

IdentitySides continuity_identity(const ChargeCurrentFn& cc, const Velocity<double>& w, const RestrictedPoint& p,
                                  const FDConfig& cfg) {
  require_alpha(p, w);
  const double lhs = a1_sum(lift_delta(cc, w.alpha()), p.six(), cfg);
  const Point4& b = p.base();
  double div_j = 0.0;
  for (int k = 0; k < 3; ++k) div_j += d4([&](const Point4& q) { return cc(q).j[k]; }, k, b, cfg);
  const double drho_dt = d4([&](const Point4& q) { return cc(q).rho; }, kT, b, cfg);
  return {lhs, div_j + drho_dt};
}

IdentitySides radial_residual(const SpeedProfileFn& s, const Velocity<double>& w, const RestrictedPoint& p,
                              const FDConfig& cfg) {
  require_alpha(p, w);
  if (!p.radial_line()) throw NotRestricted("radial check needs x_i = alpha_i r");
  const double lhs = a2_sum(lift_sigma(s, w.alpha()), p.six(), cfg);

  using P2 = std::array<double, 2>;  // (r, t)
  auto speed = [&](const P2& q) {
    const double v = s(q[0], q[1]);
    if (!(std::fabs(v) < 1.0)) throw Superluminal("speed profile reached |s| >= 1");
    return v;
  };
  auto gamma = [&](const P2& q) {
    const double v = speed(q);
    return 1.0 / std::sqrt(1.0 - v * v);
  };
  const Point4& b = p.base();
  const P2 rt{std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]), b[3]};
  const double sv = speed(rt);
  const double rhs =
      gamma(rt) * fd_partial(speed, 1, rt, cfg) + sv * fd_partial(gamma, 1, rt, cfg) + fd_partial(gamma, 0, rt, cfg);
  return {lhs, rhs};
}

double newtonian_residual(const std::function<double(double)>& s, double k, double r, const FDConfig& cfg) {
  using P1 = std::array<double, 1>;
  const double ds_dr = fd_partial([&](const P1& q) { return s(q[0]); }, 0, P1{r}, cfg);
  return std::fabs(k / (r * r) + s(r) * ds_dr);
}

double newtonian_check(double k, double r, const FDConfig& cfg) {
  if (!(k > 0.0) || !(r > 0.0)) throw std::invalid_argument("newtonian_check needs k > 0 and r > 0");
  return newtonian_residual([k](double rr) { return std::sqrt(2.0 * k / rr); }, k, r, cfg);
}

// --- invariance under boosts -------------------------------------------------

namespace {

FourVec<double> unboost(const Point4& primed, const Velocity<double>& w) {
  return boost_four<double>({{primed[0], primed[1], primed[2]}, primed[3]}, w.reversed());
}

RestrictedPoint image_point(const RestrictedPoint& p, const Velocity<double>& w) {
  const Point4& b = p.base();
  const FourVec<double> img = boost_four<double>({{b[0], b[1], b[2]}, b[3]}, w);
  return RestrictedPoint::on_slice({img.space[0], img.space[1], img.space[2], img.time}, p.alpha());
}

double chosen_sum(const MField& F, const Point6& p, AssumptionSum which, const FDConfig& cfg) {
  return which == AssumptionSum::kA1 ? a1_sum(F, p, cfg) : a2_sum(F, p, cfg);
}

}  // namespace

EMFieldFn boosted_em_field(EMFieldFn f, const Velocity<double>& w) {
  return [f = std::move(f), w](const Point4& primed) {
    const FourVec<double> u = unboost(primed, w);
    return classical_F_boost(f({u.space[0], u.space[1], u.space[2], u.time}), w);
  };
}

ChargeCurrentFn boosted_charge_current(ChargeCurrentFn cc, const Velocity<double>& w) {
  return [cc = std::move(cc), w](const Point4& primed) {
    const FourVec<double> u = unboost(primed, w);
    return classical_cc_boost(cc({u.space[0], u.space[1], u.space[2], u.time}), w);
  };
}

InvarianceSides invariance_check(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                 AssumptionSum which, const FDConfig& cfg) {
  require_alpha(p, w);
  const RestrictedPoint img = image_point(p, w);
  return {chosen_sum(lift_em_vector(f, w.alpha()), p.six(), which, cfg),
          chosen_sum(lift_em_vector(boosted_em_field(f, w), w.alpha()), img.six(), which, cfg)};
}

InvarianceSides invariance_check(const ChargeCurrentFn& cc, const Velocity<double>& w, const RestrictedPoint& p,
                                 AssumptionSum which, const FDConfig& cfg) {
  require_alpha(p, w);
  const RestrictedPoint img = image_point(p, w);
  return {chosen_sum(lift_delta(cc, w.alpha()), p.six(), which, cfg),
          chosen_sum(lift_delta(boosted_charge_current(cc, w), w.alpha()), img.six(), which, cfg)};
}

}  // namespace mrel
