#include "mrel/lorentz.hpp"
#include "mrel/mlinalg.hpp"
#include "mrel/sampling.hpp"
#include "mrel/suites.hpp"

namespace mrel {

namespace {

template <Scalar S>
void add_inputs(Digest& d, const MMat3<S>& a) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) d.add(a(r, c).re), d.add(a(r, c).im);
}

template <Scalar S>
Residual<S> compare6(const RVec6<S>& a, const RVec6<S>& b) {
  Residual<S> r;
  for (int i = 0; i < 6; ++i) r.absorb(a[i], b[i]);
  return r;
}

template <Scalar S>
Residual<S> compare6(const RMat6<S>& a, const RMat6<S>& b) {
  Residual<S> r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r.absorb(a[i][j], b[i][j]);
  return r;
}

// The 6×6 boost written out block by block in (x, t_x, y, t_y, z, t_z) order.
template <Scalar S>
RMat6<S> displayed_boost6(const S& beta, const S& gamma, const Vec3<S>& a) {
  RMat6<S> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const S diag = S((i == j ? 1 : 0) + (gamma - 1) * a[i] * a[j]);
      const S off = S(-beta * gamma * a[i] * a[j]);
      m[2 * i][2 * j] = diag;
      m[2 * i + 1][2 * j + 1] = diag;
      m[2 * i][2 * j + 1] = off;
      m[2 * i + 1][2 * j] = off;
    }
  }
  return m;
}

template <Scalar S>
std::vector<CheckRecord> run_suite(const SuiteContext& ctx) {
  const int samples = ctx.samples_or(500);
  const double tol = is_exact_v<S> ? 0.0 : 1e-12;
  std::vector<CheckRecord> out;

  auto sampled = [&](const std::string& id, const char* anchor, auto body) {
    out.push_back(run_check("mlinalg." + id, anchor, tol, [&](Check& c) {
      Rng rng(derive_seed(ctx.seed, id));
      for (int k = 0; k < samples; ++k) body(c, rng);
    }));
  };

  sampled("dot_mm.associative", "matrix dot product is associative", [](Check& c, Rng& rng) {
    const auto A = random_mmat<S>(rng), B = random_mmat<S>(rng), C = random_mmat<S>(rng);
    add_inputs(c.digest(), A);
    c.absorb(compare(dot_mm(dot_mm(A, B), C), dot_mm(A, dot_mm(B, C))));
  });
  sampled("dot_mv.compatible", "matrices act as composable operators", [](Check& c, Rng& rng) {
    const auto A = random_mmat<S>(rng), B = random_mmat<S>(rng);
    const auto x = random_mvec<S>(rng);
    add_inputs(c.digest(), A);
    c.absorb(compare(dot_mv(dot_mm(A, B), x), dot_mv(A, dot_mv(B, x))));
  });
  sampled("dot_mv.real_linear", "matrices are real-linear operators", [](Check& c, Rng& rng) {
    const auto A = random_mmat<S>(rng);
    const auto x = random_mvec<S>(rng), y = random_mvec<S>(rng);
    const S lam = rng.scalar<S>(), mu = rng.scalar<S>();
    add_inputs(c.digest(), A);
    c.absorb(compare(dot_mv(A, lam * x + mu * y), lam * dot_mv(A, x) + mu * dot_mv(A, y)));
  });
  sampled("dot.scalar_associative", "conjugated scalar product is associative", [](Check& c, Rng& rng) {
    const auto a = random_mnum<S>(rng), b = random_mnum<S>(rng), x = random_mnum<S>(rng);
    c.digest().add(a.re), c.digest().add(b.im);
    auto dot = [](const MNum<S>& p, const MNum<S>& q) { return conj(p) * q; };
    const MNum<S> lhs = dot(dot(a, b), x), rhs = dot(a, dot(b, x));
    Residual<S> r;
    r.absorb(lhs.re, rhs.re), r.absorb(lhs.im, rhs.im);
    c.absorb(r);
  });
  sampled("embed.homomorphism_mm", "block embedding into 6x6 real matrices", [](Check& c, Rng& rng) {
    const auto A = random_mmat<S>(rng), B = random_mmat<S>(rng);
    add_inputs(c.digest(), A);
    c.absorb(compare6(embed_mat(dot_mm(A, B)), mat6_mul(embed_mat(A), embed_mat(B))));
  });
  sampled("embed.homomorphism_mv", "block embedding into 6x6 real matrices", [](Check& c, Rng& rng) {
    const auto A = random_mmat<S>(rng);
    const auto x = random_mvec<S>(rng);
    add_inputs(c.digest(), A);
    c.absorb(compare6(embed_vec(dot_mv(A, x)), mat6_apply(embed_mat(A), embed_vec(x))));
  });
  sampled("embed.injective", "block embedding into 6x6 real matrices", [](Check& c, Rng& rng) {
    const auto A = random_mmat<S>(rng);
    add_inputs(c.digest(), A);
    const RMat6<S> m = embed_mat(A);
    MMat3<S> back;
    Residual<S> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        back(i, j) = {m[2 * i][2 * j], m[2 * i][2 * j + 1]};
        r.absorb(m[2 * i + 1][2 * j + 1], m[2 * i][2 * j]);
        r.absorb(m[2 * i + 1][2 * j], m[2 * i][2 * j + 1]);
      }
    r.merge(compare(back, A));
    c.absorb(r);
  });

  out.push_back(run_check("mlinalg.embed.boost_display", "6x6 form of the boost", tol, [&](Check& c) {
    Rng rng(derive_seed(ctx.seed, "embed.boost_display"));
    for (const Rational& bq : {Rational(3, 5), Rational(5, 13)}) {
      for (int k = 0; k < 20; ++k) {
        const Vec3<Rational> dq = rational_unit_direction(rng);
        const S beta = from_rational<S>(bq);
        const Vec3<S> d{from_rational<S>(dq[0]), from_rational<S>(dq[1]), from_rational<S>(dq[2])};
        const auto w = Velocity<S>::from_beta_direction(beta, d);
        c.digest().add(beta);
        c.absorb(compare6(embed_mat(build_L(w).matrix), displayed_boost6(w.beta(), w.gamma(), w.alpha())));
      }
    }
  }));

  out.push_back(run_check("mlinalg.dot_mv.examples", "conjugated matrix-vector product", tol, [&](Check& c) {
    MMat3<S> A = MMat3<S>::identity();
    A(0, 0) = {make_rational<S>(5, 4), make_rational<S>(-3, 4)};
    MVec3<S> x;
    x[0] = {S(1), S(1)};
    MVec3<S> expect;
    expect[0] = {make_rational<S>(1, 2), make_rational<S>(1, 2)};
    c.absorb(compare(dot_mv(A, x), expect));
    c.absorb(compare(dot_mv(MMat3<S>::identity(), x), x));
    c.absorb(compare(dot_mv(MMat3<S>{}, x), MVec3<S>{}));
  }));
  return out;
}

}  // namespace

std::vector<CheckRecord> suite_linalg(const SuiteContext& ctx) {
  return ctx.exact() ? run_suite<Rational>(ctx) : run_suite<double>(ctx);
}

}  // namespace mrel
