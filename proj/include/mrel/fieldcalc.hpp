#pragma once

// Finite-difference calculus over the six coordinates (x, y, z, t_x, t_y, t_z).
//
// Spacetime fields on (x, y, z, t) are lifted to the six coordinates through
// t = √(t_x² + t_y² + t_z²). The assumption sums and the derivation identities
// are evaluated on the slice t_{x_i} = α_i t, t > 0.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "mrel/errors.hpp"
#include "mrel/physents.hpp"

namespace mrel {

using Point4 = std::array<double, 4>;  // x, y, z, t
using Point6 = std::array<double, 6>;  // x, y, z, t_x, t_y, t_z

enum Coord6 : int { kX = 0, kY = 1, kZ = 2, kTx = 3, kTy = 4, kTz = 5 };

struct FDConfig {
  /// Relative step: the stencil uses h·max(1, |p[var]|).
  double h = 1e-4;
  int order = 4;  // 2 or 4
  double tolerance = 1e-5;

  /// Throws ConfigError on a non-positive step/tolerance or an unsupported order.
  void validate() const;
};

/// Central difference of order 2 or 4 in coordinate `var`.
template <std::size_t N, class Fn>
double fd_partial(const Fn& fn, int var, const std::array<double, N>& p, const FDConfig& cfg) {
  const double h = cfg.h * std::max(1.0, std::fabs(p[var]));
  auto at = [&](double offset) {
    std::array<double, N> q = p;
    q[var] += offset;
    const double v = fn(q);
    if (!std::isfinite(v)) throw NonFinite("stencil evaluation is not finite");
    return v;
  };
  if (cfg.order == 2) return (at(h) - at(-h)) / (2.0 * h);
  return (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h);
}

// --- spacetime field families --------------------------------------------

using EMFieldFn = std::function<EMField<double>(const Point4&)>;
using ChargeCurrentFn = std::function<ChargeCurrent<double>(const Point4&)>;
/// Speed profile s(r, t) of a particle in a radial force field.
using SpeedProfileFn = std::function<double(double r, double t)>;

/// Six real component functions packaged as one 𝕄³-valued map.
struct MField {
  std::function<MVec3<double>(const Point6&)> eval;
  /// Depends on (t_x, t_y, t_z) only through their norm.
  bool lifted = false;
};

/// Antisymmetric tensor field; values ordered T12, T13, T23, S12, S13, S23
/// (entry (i,j) = T_ij e + S_ij i for i < j).
struct ATensorField {
  std::function<std::array<double, 6>(const Point6&)> eval;
};

/// (x, y, z, √(t_x²+t_y²+t_z²)).
Point4 to_spacetime(const Point6& p);

/// r = √(x²+y²+z²), t = √(t_x²+t_y²+t_z²).
std::pair<double, double> radial_coordinates(const Point6& p);

MField lift_delta(ChargeCurrentFn cc, const Vec3<double>& alpha);
MField lift_em_vector(EMFieldFn f, const Vec3<double>& alpha);
/// σ_k = γ_s s α_k e + γ_s α_k i; throws Superluminal where |s| ≥ 1.
MField lift_sigma(SpeedProfileFn s, const Vec3<double>& alpha);
ATensorField lift_em_tensor(EMFieldFn f, const Vec3<double>& alpha, bool dual);

/// Σ(∂f_i/∂x_i + ∂g_i/∂t_{x_i}).
double a1_sum(const MField& F, const Point6& p, const FDConfig& cfg);
/// Σ(∂f_i/∂t_{x_i} + ∂g_i/∂x_i).
double a2_sum(const MField& F, const Point6& p, const FDConfig& cfg);
/// (∂T12/∂z − ∂S12/∂t_z) − (∂T13/∂y − ∂S13/∂t_y) + (∂T23/∂x − ∂S23/∂t_x).
double a3_sum(const ATensorField& T, const Point6& p, const FDConfig& cfg);
/// (∂T12/∂t_z − ∂S12/∂z) − (∂T13/∂t_y − ∂S13/∂y) + (∂T23/∂t_x − ∂S23/∂x).
double a4_sum(const ATensorField& T, const Point6& p, const FDConfig& cfg);

/// (∂u/∂x + ∂v/∂y, ∂u/∂y + ∂v/∂x); both vanish for 𝕄-differentiable f = ue + vi.
std::pair<double, double> cr_residual(const std::function<double(double, double)>& u,
                                      const std::function<double(double, double)>& v,
                                      const std::array<double, 2>& p, const FDConfig& cfg);

/// Curl-equation residuals in (x, y, z, t).
struct CurlResiduals {
  // ∂E_y/∂z − ∂E_z/∂y − ∂B_x/∂t,  ∂E_z/∂x − ∂E_x/∂z − ∂B_y/∂t,  ∂E_x/∂y − ∂E_y/∂x − ∂B_z/∂t
  std::array<double, 3> faraday{};
  // ∂B_z/∂x − ∂B_x/∂z + ∂E_y/∂t,  ∂B_y/∂x − ∂B_x/∂y − ∂E_z/∂t,  ∂B_z/∂y − ∂B_y/∂z − ∂E_x/∂t
  std::array<double, 3> ampere{};
};

CurlResiduals curl_residuals(const EMFieldFn& f, const Point4& p, const FDConfig& cfg);

double divergence_E(const EMFieldFn& f, const Point4& p, const FDConfig& cfg);
double divergence_B(const EMFieldFn& f, const Point4& p, const FDConfig& cfg);

/// Weights on (faraday[0], faraday[1], faraday[2]) in the a2 identity.
std::array<double, 3> curlB_weights(const Vec3<double>& alpha);
/// Weights on (ampere[0], ampere[1], ampere[2]) in the a1 identity.
std::array<double, 3> curlE_weights(const Vec3<double>& alpha);
/// Weights on (−ampere[1], ampere[2], −ampere[0]) after renaming x̃ = y, ỹ = z, z̃ = x.
std::array<double, 3> curlE_permuted_weights(const Vec3<double>& alpha);

// Signs relating the assumption sums to the spacetime expressions, frozen from
// an exact symbolic expansion and re-checked in the unit tests.
inline constexpr double kCurlBSign = -1.0;        // a2_sum(𝓕⃗) = −Σ w_k faraday_k
inline constexpr double kDivBSign = +1.0;         // a3_sum(𝓕)  = +∇·B
inline constexpr double kDivESign = -1.0;         // a3_sum(𝓕₁) = −∇·E
inline constexpr double kCurlTensorSign = -1.0;   // a4_sum = −Σ α_k (curl combination)_k

/// Point on the slice t_{x_i} = α_i t with t > 0.
class RestrictedPoint {
public:
  /// Throws NotRestricted when t ≤ 0 and InvalidVelocity for a non-unit α.
  static RestrictedPoint on_slice(const Point4& base, const Vec3<double>& alpha);
  /// Adds x_i = α_i r (radial line through the origin), r > 0.
  static RestrictedPoint radial(double r, double t, const Vec3<double>& alpha);
  /// Validates an arbitrary six-coordinate point against the slice.
  static RestrictedPoint from_six(const Point6& p, const Vec3<double>& alpha, double tol = 1e-12);

  const Point4& base() const { return base_; }
  const Vec3<double>& alpha() const { return alpha_; }
  Point6 six() const;
  bool radial_line() const { return radial_; }

private:
  RestrictedPoint(const Point4& base, const Vec3<double>& alpha, bool radial)
      : base_(base), alpha_(alpha), radial_(radial) {}

  Point4 base_;
  Vec3<double> alpha_;
  bool radial_ = false;
};

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;

  double gap() const { return std::fabs(lhs - rhs); }
};

/// lhs = a2_sum of the lifted field vector; rhs = kCurlBSign·Σ w_k faraday_k.
IdentitySides identity_a2_curlB(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                const FDConfig& cfg);
/// lhs = a1_sum of the lifted field vector; rhs = Σ w_k ampere_k.
IdentitySides identity_a1_curlE(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                const FDConfig& cfg);
/// Same identity after renaming axes x̃ = y, ỹ = z, z̃ = x: lhs is a1_sum of the
/// renamed field's lift, rhs the permuted-weight combination in the original axes.
IdentitySides identity_a1_curlE_permuted(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                         const FDConfig& cfg);
/// lhs = a3_sum of the tensor lift; rhs = kDivBSign·∇·B (or kDivESign·∇·E for the dual).
IdentitySides a3_divergence(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p, bool dual,
                            const FDConfig& cfg);
/// lhs = a4_sum of the tensor lift; rhs = kCurlTensorSign·Σ α_k c_k where
/// c = (∂E_y/∂z − ∂E_z/∂y − ∂B_x/∂t, ...) for 𝓕 and
/// c = (∂B_y/∂z − ∂B_z/∂y + ∂E_x/∂t, ...) for 𝓕₁.
IdentitySides a4_translation(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p, bool dual,
                             const FDConfig& cfg);
/// lhs = a1_sum of the δ-lift; rhs = ∇·j + ∂ρ/∂t.
IdentitySides continuity_identity(const ChargeCurrentFn& cc, const Velocity<double>& w, const RestrictedPoint& p,
                                  const FDConfig& cfg);
/// lhs = a2_sum of the σ-lift at a radial point; rhs = γ_s ∂s/∂t + s ∂γ_s/∂t + ∂γ_s/∂r.
IdentitySides radial_residual(const SpeedProfileFn& s, const Velocity<double>& w, const RestrictedPoint& p,
                              const FDConfig& cfg);

/// |k/r² + s ∂s/∂r| for the given profile s(r).
double newtonian_residual(const std::function<double(double)>& s, double k, double r, const FDConfig& cfg);
/// newtonian_residual with the energy-conservation profile s(r) = √(2k/r).
double newtonian_check(double k, double r, const FDConfig& cfg);

enum class AssumptionSum { kA1, kA2 };

struct InvarianceSides {
  double unprimed = 0.0;
  double primed = 0.0;

  double gap() const { return std::fabs(unprimed - primed); }
};

/// Chosen sum of the lifted field at p, and of the lift built from classically
/// boosted constituents at the image of p in the primed frame (same α).
InvarianceSides invariance_check(const EMFieldFn& f, const Velocity<double>& w, const RestrictedPoint& p,
                                 AssumptionSum which, const FDConfig& cfg);
InvarianceSides invariance_check(const ChargeCurrentFn& cc, const Velocity<double>& w, const RestrictedPoint& p,
                                 AssumptionSum which, const FDConfig& cfg);

/// Fields seen from the boosted frame, as functions of primed coordinates (c = 1).
EMFieldFn boosted_em_field(EMFieldFn f, const Velocity<double>& w);
ChargeCurrentFn boosted_charge_current(ChargeCurrentFn cc, const Velocity<double>& w);

}  // namespace mrel
