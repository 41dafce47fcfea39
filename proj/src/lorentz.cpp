#include "mrel/lorentz.hpp"

namespace mrel {

Velocity<double> compose_velocities(const Velocity<double>& u, const Velocity<double>& v) {
  const Vec3<double> uc = u.components();
  const Vec3<double> vc = v.components();
  const double gu = u.gamma();
  const double uv = dot3(uc, vc);
  const double k = gu / (1.0 + gu);
  Vec3<double> w;
  for (int i = 0; i < 3; ++i) w[i] = (uc[i] + vc[i] / gu + k * uv * uc[i]) / (1.0 + uv);
  return Velocity<double>::from_components(w, u.c());
}

double composition_gap(const Velocity<double>& w_ab, const Velocity<double>& w_bc, const Event4<double>& ev) {
  const MEvent<double> x_ab = build_m_event(ev, w_ab);
  const MVec3<double> chained = dot_mv(build_L(w_bc).matrix, dot_mv(build_L(w_ab).matrix, x_ab.vec));

  const Event4<double> twice = classical_boost(classical_boost(ev, w_ab), w_bc);
  const Velocity<double> w_ac = compose_velocities(w_ab, w_bc);
  const MEvent<double> expected = build_m_event(twice, w_ac);
  return compare(chained, expected.vec).value;
}

}  // namespace mrel
