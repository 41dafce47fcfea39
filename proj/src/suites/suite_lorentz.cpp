#include "mrel/errors.hpp"
#include "mrel/lorentz.hpp"
#include "mrel/sampling.hpp"
#include "mrel/suites.hpp"

namespace mrel {

namespace {

template <Scalar S>
void add_inputs(Digest& d, const Event4<S>& ev, const Velocity<S>& w) {
  d.add(ev.x), d.add(ev.y), d.add(ev.z), d.add(ev.t);
  d.add(w.beta());
  for (const S& a : w.alpha()) d.add(a);
}

template <Scalar S>
Residual<S> compare_events(const Event4<S>& a, const Event4<S>& b) {
  Residual<S> r;
  r.absorb(a.x, b.x), r.absorb(a.y, b.y), r.absorb(a.z, b.z), r.absorb(a.t, b.t);
  return r;
}

template <Scalar S>
Velocity<S> axis_velocity(int axis, long num, long den) {
  Vec3<S> v{S(0), S(0), S(0)};
  v[axis] = make_rational<S>(num, den);
  return Velocity<S>::from_components(v);
}

template <Scalar S>
std::vector<CheckRecord> run_suite(const SuiteContext& ctx) {
  const int samples = ctx.samples_or(is_exact_v<S> ? 500 : 1000);
  const double tol = is_exact_v<S> ? 0.0 : 1e-12;
  const auto& betas = ctx.cfg.betas;
  std::vector<CheckRecord> out;

  auto sampled = [&](const std::string& id, const char* anchor, auto body) {
    out.push_back(run_check("lorentz." + id, anchor, tol, [&](Check& c) {
      Rng rng(derive_seed(ctx.seed, id));
      for (int k = 0; k < samples; ++k) {
        const Velocity<S> w = random_velocity<S>(rng, betas);
        const Event4<S> ev = random_event<S>(rng);
        add_inputs(c.digest(), ev, w);
        body(c, ev, w);
      }
    }));
  };

  sampled("consistency_residual.random", "L applied to the event matches the classical boost",
          [](Check& c, const Event4<S>& ev, const Velocity<S>& w) { c.absorb(consistency_residual(ev, w)); });

  sampled("classical_boost.complex_form", "boost matrix with imaginary time",
          [](Check& c, const Event4<S>& ev, const Velocity<S>& w) {
            const CMat4<S> lam = classical_lambda_complex(w);
            const std::array<CNum<S>, 4> chi{CNum<S>{ev.x, S(0)}, CNum<S>{ev.y, S(0)}, CNum<S>{ev.z, S(0)},
                                             CNum<S>{S(0), S(w.c() * ev.t)}};
            const Event4<S> real = classical_boost(ev, w);
            const S expect_re[4] = {real.x, real.y, real.z, S(0)};
            const S expect_im[4] = {S(0), S(0), S(0), S(w.c() * real.t)};
            Residual<S> r;
            for (int i = 0; i < 4; ++i) {
              CNum<S> acc;
              for (int k = 0; k < 4; ++k) acc = acc + lam[i][k] * chi[k];
              r.absorb(acc.re, expect_re[i]);
              r.absorb(acc.im, expect_im[i]);
            }
            c.absorb(r);
          });

  sampled("build_m_event.time_parts", "time components follow the direction cosines",
          [](Check& c, const Event4<S>& ev, const Velocity<S>& w) {
            const MEvent<S> x = build_m_event(ev, w);
            Residual<S> r;
            S norm(0);
            for (int k = 0; k < 3; ++k) {
              r.absorb(x.vec[k].im, S(w.alpha()[k] * w.c() * ev.t));
              norm += x.vec[k].im * x.vec[k].im;
            }
            r.absorb(norm, S(w.c() * w.c() * ev.t * ev.t));
            c.absorb(r);
          });

  sampled("reverse_representation.random", "primed event seen from the reversed velocity",
          [](Check& c, const Event4<S>& ev, const Velocity<S>& w) {
            const MEvent<S> xp = transform(build_L(w), build_m_event(ev, w));
            const MEvent<S> rev = reverse_representation(xp);
            const MEvent<S> expect = build_m_event(classical_boost(ev, w), w.reversed());
            c.absorb(compare(rev.vec, expect.vec));
          });

  sampled("invert_event.random", "inverse of L via conjugation", [](Check& c, const Event4<S>& ev, const Velocity<S>& w) {
    const MLorentz<S> L = build_L(w);
    const MEvent<S> x = build_m_event(ev, w);
    c.absorb(compare(invert_event(L, transform(L, x)).vec, x.vec));
  });

  out.push_back(run_check("lorentz.classical_boost.examples", "boost of single events", tol, [&](Check& c) {
    const auto wx = axis_velocity<S>(0, 3, 5);
    const auto wy = axis_velocity<S>(1, 3, 5);
    c.absorb(compare_events(classical_boost(Event4<S>{S(1), S(0), S(0), S(1)}, wx),
                            Event4<S>{make_rational<S>(1, 2), S(0), S(0), make_rational<S>(1, 2)}));
    c.absorb(compare_events(classical_boost(Event4<S>{S(0), S(1), S(0), S(0)}, wy),
                            Event4<S>{S(0), make_rational<S>(5, 4), S(0), make_rational<S>(-3, 4)}));
    c.absorb(compare_events(classical_boost(Event4<S>{}, wx), Event4<S>{}));
  }));

  out.push_back(run_check("lorentz.build_L.examples", "L for an axis-aligned boost", tol, [&](Check& c) {
    const auto L = build_L(axis_velocity<S>(0, 3, 5));
    MMat3<S> expect = MMat3<S>::identity();
    expect(0, 0) = {make_rational<S>(5, 4), make_rational<S>(-3, 4)};
    c.absorb(compare(L.matrix, expect));
    const auto Ly = build_L(axis_velocity<S>(1, 3, 5));
    MVec3<S> x;
    x[1] = {S(1), S(0)};
    MVec3<S> y;
    y[1] = {make_rational<S>(5, 4), make_rational<S>(-3, 4)};
    c.absorb(compare(transform(Ly, MEvent<S>{x, Ly.alpha}).vec, y));
  }));

  out.push_back(run_check("lorentz.transform.alpha_mismatch", "alpha carried by the event", 0.0, [&](Check& c) {
    const auto L = build_L(axis_velocity<S>(0, 3, 5));
    const auto x = build_m_event(Event4<S>{S(1), S(2), S(3), S(4)}, axis_velocity<S>(1, 3, 5));
    bool threw = false;
    try {
      transform(L, x);
    } catch (const AlphaMismatch&) {
      threw = true;
    }
    c.expect(threw);
  }));

  out.push_back(run_check("lorentz.velocity.invalid", "0 < beta < 1", 0.0, [&](Check& c) {
    auto rejects = [](const Vec3<S>& v) {
      try {
        Velocity<S>::from_components(v);
      } catch (const InvalidVelocity&) {
        return true;
      }
      return false;
    };
    c.expect(rejects({S(0), S(0), S(0)}));
    c.expect(rejects({S(1), S(0), S(0)}));
    c.expect(rejects({make_rational<S>(3, 5), make_rational<S>(4, 5), S(0)}));
    c.expect(!rejects({make_rational<S>(3, 5), S(0), S(0)}));
  }));

  out.push_back(run_check("lorentz.composition_gap.witness", "no closure under composition", 0.0, [&](Check& c) {
    const auto ab = Velocity<double>::from_components({0.6, 0.0, 0.0});
    const auto bc = Velocity<double>::from_components({0.0, 0.6, 0.0});
    const double gap = composition_gap(ab, bc, {1.0, 1.0, 0.0, 1.0});
    c.set_detail("gap=" + ScalarTraits<double>::to_string(gap));
    c.expect(gap > 0.01);
  }));
  return out;
}

}  // namespace

std::vector<CheckRecord> suite_lorentz(const SuiteContext& ctx) {
  return ctx.exact() ? run_suite<Rational>(ctx) : run_suite<double>(ctx);
}

}  // namespace mrel
