#include "mrel/fieldcalc.hpp"
#include "mrel/sampling.hpp"
#include "mrel/suites.hpp"

namespace mrel {

namespace {

struct Sample {
  Velocity<double> w;
  RestrictedPoint p;
};

Sample draw_point(Rng& rng, double space, double t_lo, double t_hi, double beta_max) {
  const Velocity<double> w = random_velocity<double>(rng, {}, beta_max);
  const Point4 base{rng.uniform(-space, space), rng.uniform(-space, space), rng.uniform(-space, space),
                    rng.uniform(t_lo, t_hi)};
  return {w, RestrictedPoint::on_slice(base, w.alpha())};
}

void add_point(Digest& d, const Sample& s) {
  for (double v : s.p.base()) d.add(v);
  d.add(s.w.beta());
}

}  // namespace

// Finite differences have no exact counterpart, so this suite runs in float
// arithmetic whatever the configured mode.
std::vector<CheckRecord> suite_fields(const SuiteContext& ctx) {
  const int samples = ctx.samples_or(100);
  FDConfig cfg;
  cfg.h = ctx.cfg.fd_step;
  cfg.tolerance = ctx.cfg.tol;
  cfg.validate();
  const double tol = cfg.tolerance;
  std::vector<CheckRecord> out;

  auto em_identity = [&](const std::string& id, const char* anchor, auto fn) {
    out.push_back(run_check("fieldcalc." + id, anchor, tol, [&](Check& c) {
      Rng rng(derive_seed(ctx.seed, id));
      for (int k = 0; k < samples; ++k) {
        const EMFieldFn f = random_em_field_fn(rng);
        const Sample s = draw_point(rng, 1.5, 0.5, 2.0, 0.95);
        add_point(c.digest(), s);
        c.residual(fn(f, s).gap());
      }
    }));
  };

  em_identity("identity_a2_curlB.random", "a2 sum as curl E combination", [&](const EMFieldFn& f, const Sample& s) {
    return identity_a2_curlB(f, s.w, s.p, cfg);
  });
  em_identity("identity_a1_curlE.random", "a1 sum as curl B combination", [&](const EMFieldFn& f, const Sample& s) {
    return identity_a1_curlE(f, s.w, s.p, cfg);
  });
  em_identity("identity_a1_curlE.permuted", "a1 sum with renamed axes", [&](const EMFieldFn& f, const Sample& s) {
    return identity_a1_curlE_permuted(f, s.w, s.p, cfg);
  });
  em_identity("a3_divergence.tensor", "a3 sum as div B", [&](const EMFieldFn& f, const Sample& s) {
    return a3_divergence(f, s.w, s.p, false, cfg);
  });
  em_identity("a3_divergence.dual", "a3 sum as div E", [&](const EMFieldFn& f, const Sample& s) {
    return a3_divergence(f, s.w, s.p, true, cfg);
  });
  em_identity("a4_translation.tensor", "a4 sum as curl combination", [&](const EMFieldFn& f, const Sample& s) {
    return a4_translation(f, s.w, s.p, false, cfg);
  });
  em_identity("a4_translation.dual", "a4 sum as curl combination", [&](const EMFieldFn& f, const Sample& s) {
    return a4_translation(f, s.w, s.p, true, cfg);
  });

  out.push_back(run_check("fieldcalc.continuity_identity.random", "a1 sum as continuity equation", tol, [&](Check& c) {
    Rng rng(derive_seed(ctx.seed, "continuity_identity.random"));
    for (int k = 0; k < samples; ++k) {
      const ChargeCurrentFn cc = random_charge_current_fn(rng);
      const Sample s = draw_point(rng, 1.5, 0.5, 2.0, 0.95);
      add_point(c.digest(), s);
      c.residual(continuity_identity(cc, s.w, s.p, cfg).gap());
    }
  }));

  out.push_back(run_check("fieldcalc.radial_residual.random", "a2 sum for the velocity field", tol, [&](Check& c) {
    Rng rng(derive_seed(ctx.seed, "radial_residual.random"));
    for (int k = 0; k < samples; ++k) {
      const SpeedProfileFn sp = random_speed_profile(rng);
      const Velocity<double> w = random_velocity<double>(rng, {});
      const double r = rng.uniform(0.3, 2.0), t = rng.uniform(0.5, 2.0);
      c.digest().add(r), c.digest().add(t);
      c.residual(radial_residual(sp, w, RestrictedPoint::radial(r, t, w.alpha()), cfg).gap());
    }
  }));

  out.push_back(run_check("fieldcalc.newtonian_check.grid", "Newtonian limit", 1e-6, [&](Check& c) {
    for (double k : {1.0, 2.0, 5.0})
      for (double r : {0.5, 1.0, 4.0}) {
        c.digest().add(k), c.digest().add(r);
        c.residual(newtonian_check(k, r, cfg));
      }
  }));

  auto wave_sum = [&](const std::string& id, const char* anchor, auto fn) {
    out.push_back(run_check("fieldcalc." + id, anchor, tol, [&](Check& c) {
      Rng rng(derive_seed(ctx.seed, id));
      for (int k = 0; k < samples; ++k) {
        const EMFieldFn f = random_plane_wave(rng);
        const Sample s = draw_point(rng, 1.5, 0.5, 2.0, 0.95);
        add_point(c.digest(), s);
        c.residual(std::fabs(fn(f, s)));
      }
    }));
  };
  wave_sum("plane_wave.a1_sum", "vacuum fields satisfy a1", [&](const EMFieldFn& f, const Sample& s) {
    return a1_sum(lift_em_vector(f, s.w.alpha()), s.p.six(), cfg);
  });
  wave_sum("plane_wave.a2_sum", "vacuum fields satisfy a2", [&](const EMFieldFn& f, const Sample& s) {
    return a2_sum(lift_em_vector(f, s.w.alpha()), s.p.six(), cfg);
  });
  wave_sum("plane_wave.a3_sum", "vacuum fields satisfy a3", [&](const EMFieldFn& f, const Sample& s) {
    return std::max(std::fabs(a3_sum(lift_em_tensor(f, s.w.alpha(), false), s.p.six(), cfg)),
                    std::fabs(a3_sum(lift_em_tensor(f, s.w.alpha(), true), s.p.six(), cfg)));
  });
  wave_sum("plane_wave.a4_sum", "vacuum fields satisfy a4", [&](const EMFieldFn& f, const Sample& s) {
    return std::max(std::fabs(a4_sum(lift_em_tensor(f, s.w.alpha(), false), s.p.six(), cfg)),
                    std::fabs(a4_sum(lift_em_tensor(f, s.w.alpha(), true), s.p.six(), cfg)));
  });

  auto invariance = [&](const std::string& id, AssumptionSum which, bool em) {
    out.push_back(run_check("fieldcalc." + id, "sums are invariants of L", tol, [&](Check& c) {
      Rng rng(derive_seed(ctx.seed, id));
      for (int k = 0; k < samples; ++k) {
        // Small boosts near the origin keep the image point at t' > 0.
        const Sample s = draw_point(rng, 0.5, 1.0, 2.0, 0.6);
        add_point(c.digest(), s);
        const InvarianceSides sides = em ? invariance_check(random_em_field_fn(rng), s.w, s.p, which, cfg)
                                         : invariance_check(random_charge_current_fn(rng), s.w, s.p, which, cfg);
        c.residual(sides.gap());
      }
    }));
  };
  invariance("invariance_check.em_a1", AssumptionSum::kA1, true);
  invariance("invariance_check.em_a2", AssumptionSum::kA2, true);
  invariance("invariance_check.cc_a1", AssumptionSum::kA1, false);
  invariance("invariance_check.cc_a2", AssumptionSum::kA2, false);

  out.push_back(run_check("fieldcalc.lift.dt_dtx", "dt/dt_x equals alpha on the slice", tol, [&](Check& c) {
    Rng rng(derive_seed(ctx.seed, "lift.dt_dtx"));
    for (int k = 0; k < samples; ++k) {
      const Sample s = draw_point(rng, 1.5, 0.5, 2.0, 0.95);
      add_point(c.digest(), s);
      for (int i = 0; i < 3; ++i) {
        const double d = fd_partial([](const Point6& q) { return to_spacetime(q)[3]; }, kTx + i, s.p.six(), cfg);
        c.residual(std::fabs(d - s.w.alpha()[i]));
      }
    }
  }));

  out.push_back(run_check("fieldcalc.cr_residual.examples", "Cauchy-Riemann analogs", tol, [&](Check& c) {
    auto u = [](double x, double y) { return x * x + y * y; };
    auto v = [](double x, double y) { return -2.0 * x * y; };
    Rng rng(derive_seed(ctx.seed, "cr_residual.examples"));
    for (int k = 0; k < samples; ++k) {
      const std::array<double, 2> p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
      const auto [a, b] = cr_residual(u, v, p, cfg);
      c.residual(std::max(std::fabs(a), std::fabs(b)));
    }
  }));
  return out;
}

}  // namespace mrel
