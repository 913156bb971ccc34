#include "pslet/effective_problem.hpp"

#include <stdexcept>

namespace pslet {

xreal PotentialSpec::coulomb_vector_strength() const {
  return -vector_part.coefficient(Rational(-1));
}

xreal PotentialSpec::coulomb_scalar_strength() const {
  return -scalar_part.coefficient(Rational(-1));
}

PowerSum build_y(const PotentialSpec& spec) {
  return spec.vector_part.minus(spec.scalar_part);
}

PowerSum build_U(const PowerSum& y, int kappa, const xreal& m, int lambda) {
  if (lambda == 0 || y.empty()) return PowerSum();
  if (m <= 0) throw std::domain_error("build_U requires m > 0");
  PowerSum yp = y.derivative();
  PowerSum ypp = yp.derivative();
  PowerSum bracket = ypp;
  bracket = bracket.plus(
      yp.product(PowerSum::monomial(xreal(-2 * kappa), Rational(-1))));
  bracket = bracket.plus(yp.product(yp).scaled(xreal(3) / (4 * m)));
  return bracket.scaled(xreal(1) / (4 * m));
}

EffectiveProblem build_effective(const PotentialSpec& spec, int ell) {
  const xreal a1 = spec.coulomb_vector_strength();
  const xreal a2 = spec.coulomb_scalar_strength();
  const xreal half(0.5);

  xreal radicand = (ell + half) * (ell + half) - a1 * a1 + a2 * a2;
  if (radicand < 0)
    throw std::domain_error(
        "subcritical coupling: (l+1/2)^2 - A1^2 + A2^2 < 0 (Coulomb collapse)");

  EffectiveProblem prob;
  prob.ell_eff = -half + sqrt(radicand);
  prob.mass = spec.mass;
  prob.quantum_ell = ell;
  prob.vector_for_coupling = spec.vector_part;

  const int lambda = spec.equation_kind == EquationKind::Dirac ? 1 : 0;
  prob.spin_orbit_term = build_U(build_y(spec), spec.kappa, spec.mass, lambda);

  // V_r = V^2 - A1^2/r^2 and S_r = S^2 - A2^2/r^2; the A^2/r^2 pieces are
  // the ones absorbed into l'.
  PowerSum v_r = spec.vector_part.product(spec.vector_part)
                     .minus(PowerSum::monomial(a1 * a1, Rational(-2)));
  PowerSum s_r = spec.scalar_part.product(spec.scalar_part)
                     .minus(PowerSum::monomial(a2 * a2, Rational(-2)));

  prob.gamma = s_r.minus(v_r);
  prob.gamma = prob.gamma.plus(spec.scalar_part.scaled(2 * spec.mass));
  prob.gamma = prob.gamma.plus(PowerSum::constant(spec.mass * spec.mass));
  prob.gamma = prob.gamma.plus(prob.spin_orbit_term);
  return prob;
}

EffectiveProblem build_effective(const PotentialSpec& spec) {
  if (spec.kappa == 0) throw std::domain_error("kappa must be nonzero");
  return build_effective(spec, spec.ell());
}

}  // namespace pslet
