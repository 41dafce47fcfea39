#include "mrel/physents.hpp"
#include "mrel/sampling.hpp"
#include "mrel/suites.hpp"

namespace mrel {

namespace {

template <Scalar S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {S(a[1] * b[2] - a[2] * b[1]), S(a[2] * b[0] - a[0] * b[2]), S(a[0] * b[1] - a[1] * b[0])};
}

// Field transformation written with parallel and perpendicular parts.
template <Scalar S>
EMField<S> field_boost_oracle(const EMField<S>& f, const Velocity<S>& w) {
  const Vec3<S>& a = w.alpha();
  const Vec3<S> v = w.components();
  const Vec3<S> vxB = cross(v, f.B);
  const Vec3<S> vxE = cross(v, f.E);
  const S g = w.gamma();
  Vec3<S> ep, bp;
  for (int k = 0; k < 3; ++k) {
    ep[k] = f.E[k] + vxB[k];
    bp[k] = f.B[k] - vxE[k];
  }
  const S ea = dot3(ep, a), ba = dot3(bp, a);
  const S e_par = dot3(f.E, a), b_par = dot3(f.B, a);
  EMField<S> out;
  for (int k = 0; k < 3; ++k) {
    out.E[k] = e_par * a[k] + g * (ep[k] - ea * a[k]);
    out.B[k] = b_par * a[k] + g * (bp[k] - ba * a[k]);
  }
  return out;
}

template <Scalar S>
std::vector<CheckRecord> run_suite(const SuiteContext& ctx) {
  const int samples = ctx.samples_or(is_exact_v<S> ? 100 : 500);
  const double tol = is_exact_v<S> ? 0.0 : 1e-9;
  std::vector<CheckRecord> out;

  auto sampled = [&](const std::string& id, const char* anchor, auto draw, auto body) {
    out.push_back(run_check("physents." + id, anchor, tol, [&](Check& c) {
      Rng rng(derive_seed(ctx.seed, id));
      for (int k = 0; k < samples; ++k) {
        const Velocity<S> w = random_velocity<S>(rng, ctx.cfg.betas);
        const auto x = draw(rng);
        c.digest().add(w.beta());
        for (const S& a : w.alpha()) c.digest().add(a);
        body(c, x, w);
      }
    }));
  };

  auto draw_cc = [](Rng& rng) { return random_charge_current<S>(rng); };
  auto draw_f = [](Rng& rng) { return random_em_field<S>(rng); };
  auto draw_s = [](Rng& rng) { return random_angmom_state<S>(rng); };

  sampled("delta.consistency", "current-charge vector under L", draw_cc,
          [](Check& c, const ChargeCurrent<S>& cc, const Velocity<S>& w) {
            c.digest().add(cc.rho);
            c.absorb(delta_consistency(cc, w));
          });
  sampled("em_vector.consistency", "field vector under L", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            c.digest().add(f.E[0]);
            c.absorb(em_vector_consistency(f, w));
          });
  sampled("em_tensor.consistency", "rank-2 field tensor under L", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            c.digest().add(f.E[0]);
            c.absorb(em_tensor_consistency(f, w, false));
          });
  sampled("em_tensor_dual.consistency", "dual field tensor under L", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            c.digest().add(f.E[0]);
            c.absorb(em_tensor_consistency(f, w, true));
          });
  sampled("angmom.consistency", "angular momentum tensor under L", draw_s,
          [](Check& c, const AngMomState<S>& s, const Velocity<S>& w) {
            c.digest().add(s.t);
            c.absorb(angmom_consistency(s, w));
          });
  sampled("classical_F_boost.field_formula", "boosted E and B", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            c.absorb(compare(classical_F_boost(f, w), field_boost_oracle(f, w)));
          });
  sampled("em_tensor.antisymmetric", "antisymmetric tensors", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            const double t = is_exact_v<S> ? 0.0 : 1e-12;
            c.expect(is_antisymmetric(build_em_tensor(f, w, false), t) &&
                     is_antisymmetric(build_em_tensor(f, w, true), t));
          });
  sampled("angmom.antisymmetric", "antisymmetric tensors", draw_s,
          [](Check& c, const AngMomState<S>& s, const Velocity<S>& w) {
            const double t = is_exact_v<S> ? 0.0 : 1e-12;
            c.expect(is_antisymmetric(build_angmom_tensor(s, w), t));
          });
  sampled("classical_F_boost.round_trip", "boost by v then -v", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            c.absorb(compare(classical_F_boost(classical_F_boost(f, w), w.reversed()), f));
          });
  sampled("lambda.inverse", "inverse boost reverses the velocity", draw_f,
          [](Check& c, const EMField<S>&, const Velocity<S>& w) {
            const CMat4<S> prod = cmat4_mul(classical_lambda_complex(w), classical_lambda_complex(w.reversed()));
            Residual<S> r;
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j) {
                r.absorb(prod[i][j].re, S(i == j ? 1 : 0));
                r.absorb(prod[i][j].im, S(0));
              }
            c.absorb(r);
          });
  sampled("tensor_transform.associative", "L T L is unambiguous", draw_f,
          [](Check& c, const EMField<S>& f, const Velocity<S>& w) {
            const MMat3<S> L = build_L(w).matrix;
            const MMat3<S> T = build_em_tensor(f, w, false);
            c.absorb(compare(dot_mm(dot_mm(L, T), L), dot_mm(L, dot_mm(T, L))));
          });
  return out;
}

}  // namespace

std::vector<CheckRecord> suite_entities(const SuiteContext& ctx) {
  return ctx.exact() ? run_suite<Rational>(ctx) : run_suite<double>(ctx);
}

}  // namespace mrel
