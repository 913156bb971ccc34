#include <doctest.h>

#include "pslet/exact.hpp"
#include "pslet/shooting.hpp"

using namespace pslet;

namespace {

EffectiveProblem mixed_coulomb_problem(double m, double A, int ell) {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(xreal(-A), Rational(-1));
  s.scalar_part = PowerSum::monomial(xreal(-A), Rational(-1));
  s.mass = m;
  s.kappa = -(ell + 1);
  return build_effective(s, ell);
}

}  // namespace

TEST_CASE("count_nodes") {
  CHECK(count_nodes({1, 2, 3}) == 0);
  CHECK(count_nodes({1, -1, 1}) == 2);
  CHECK(count_nodes({1, 0, -1}) == 1);  // zeros skipped, one crossing
  CHECK(count_nodes({}) == 0);
}

TEST_CASE("mixed Coulomb eigenvalues against the closed form") {
  ShootingConfig cfg;
  cfg.steps = 60000;
  auto prob = mixed_coulomb_problem(1.0, 0.5, 0);
  auto res = shoot_eigenvalue(prob, 0, cfg);
  CHECK(res.nodes <= 1);
  CHECK(std::fabs(res.E_num - 0.6) < 1e-7);
  CHECK(res.matched);
  CHECK(res.mesh_halving_delta < 1e-7);

  // ground state at exactly zero energy (A = m = 1)
  auto zero = shoot_eigenvalue(mixed_coulomb_problem(1.0, 1.0, 0), 0, cfg);
  CHECK(std::fabs(zero.E_num) < 1e-6);
}

TEST_CASE("node theorem: E increases with k") {
  ShootingConfig cfg;
  cfg.steps = 30000;
  auto prob = mixed_coulomb_problem(1.0, 0.8, 0);
  double last = -1;
  for (int k = 0; k < 3; ++k) {
    auto res = shoot_eigenvalue(prob, k, cfg);
    CHECK(res.E_num > last);
    last = res.E_num;
  }
}

TEST_CASE("confining potential: scalar linear ground state") {
  PotentialSpec s;
  s.scalar_part = PowerSum::monomial(xreal("0.137"), Rational(1));
  s.mass = xreal("1.12");
  s.kappa = -1;
  auto prob = build_effective(s, 0);
  ShootingConfig cfg;
  cfg.steps = 60000;
  auto res = shoot_eigenvalue(prob, 0, cfg);
  // reduced-equation value; the reference numeric integration of the
  // unreduced system reports 3.103 for 2E
  CHECK(std::fabs(2 * res.E_num - 3.0934) < 2e-3);
  CHECK(res.matched);
}

TEST_CASE("similarity-route Coulomb problems integrate to the closed forms") {
  // vector: centrifugal gamma(gamma+1) with s=+1, coupling 2E(-A1/r)
  const double a1 = 0.5;
  EffectiveProblem vec;
  vec.gamma = PowerSum::constant(xreal(1));
  vec.vector_for_coupling = PowerSum::monomial(xreal(-a1), Rational(-1));
  vec.ell_eff = sqrt(xreal(1) - xreal("0.25"));  // gamma, kappa = -1
  vec.mass = 1;
  ShootingConfig cfg;
  cfg.steps = 60000;
  auto res = shoot_eigenvalue(vec, 0, cfg);
  double expect = static_cast<double>(
      exact::dirac_coulomb(exact::CoulombKind::Vector, 1, xreal("0.5"), 0, -1, 1));
  CHECK(std::fabs(res.E_num - expect) < 1e-6);

  // scalar: Gamma = m^2 - 2 m A2 / r
  const double a2 = 1.0;
  EffectiveProblem sca;
  sca.gamma = PowerSum({{xreal(1), Rational(0)}, {xreal(-2 * a2), Rational(-1)}});
  sca.ell_eff = sqrt(xreal(1) + xreal(1));  // gamma = sqrt(kappa^2 + A2^2)
  sca.mass = 1;
  auto res2 = shoot_eigenvalue(sca, 0, cfg);
  double expect2 = static_cast<double>(
      exact::dirac_coulomb(exact::CoulombKind::Scalar, 1, 1, 0, -1, 1));
  CHECK(std::fabs(res2.E_num - expect2) < 1e-6);
}

TEST_CASE("configuration validation") {
  auto prob = mixed_coulomb_problem(1.0, 0.5, 0);
  ShootingConfig bad;
  bad.steps = 100;
  CHECK_THROWS_AS(shoot_eigenvalue(prob, 0, bad), std::domain_error);
  CHECK_THROWS_AS(shoot_eigenvalue(prob, -1, ShootingConfig{}), std::domain_error);

  ShootingConfig narrow;
  narrow.steps = 20000;
  narrow.energy_bracket = {0.99, 0.999};  // no bound state up there
  CHECK_THROWS_AS(shoot_eigenvalue(prob, 0, narrow), std::runtime_error);
}
