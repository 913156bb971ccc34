#include <doctest.h>

#include "pslet/effective_problem.hpp"

using namespace pslet;

namespace {

PotentialSpec mixed_coulomb_spec(const xreal& m, const xreal& A) {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(-A, Rational(-1));
  s.scalar_part = PowerSum::monomial(-A, Rational(-1));
  s.mass = m;
  s.equation_kind = EquationKind::Dirac;
  s.kappa = -1;
  return s;
}

bool close(const xreal& a, const xreal& b, const xreal& tol) {
  return abs(a - b) <= tol * (abs(a) + abs(b) + 1);
}

}  // namespace

TEST_CASE("build_y") {
  CHECK(build_y(mixed_coulomb_spec(1, 1)).empty());

  PotentialSpec funnel;
  funnel.vector_part = PowerSum::monomial(-2 * xreal("0.39") / 3, Rational(-1));
  funnel.scalar_part = PowerSum::monomial(xreal("0.21055") / 2, Rational(1));
  funnel.mass = xreal("1.358");
  PowerSum y = build_y(funnel);
  CHECK(close(y.coefficient(Rational(-1)), xreal("-0.26"), xreal("1e-40")));
  CHECK(close(y.coefficient(Rational(1)), xreal("-0.105275"), xreal("1e-40")));

  PotentialSpec slin;
  slin.scalar_part = PowerSum::monomial(xreal("0.137"), Rational(1));
  slin.mass = xreal("1.12");
  CHECK(build_y(slin).coefficient(Rational(1)) == xreal("-0.137"));
}

TEST_CASE("build_U") {
  // lambda = 0 switches the spin-orbit term off entirely
  PowerSum y = PowerSum::monomial(xreal(-1), Rational(1));
  CHECK(build_U(y, -1, xreal(1), 0).empty());
  // y = 0 (equally mixed case)
  CHECK(build_U(PowerSum(), -1, xreal(1), 1).empty());

  // pure scalar linear: U = (1/4m)[2 kappa A / r + 3A^2/(4m)]
  const xreal A("0.137"), m("1.12");
  PowerSum u = build_U(PowerSum::monomial(-A, Rational(1)), -1, m, 1);
  CHECK(close(u.coefficient(Rational(-1)),
              xreal("-0.06116071428571428571428571428571428571429"), xreal("1e-35")));
  CHECK(close(u.coefficient(Rational(0)),
              xreal("0.002805474728954081632653061224489795918367"), xreal("1e-35")));
  // pointwise cross-check against the assembled formula at r = 1.3
  CHECK(close(u.eval(xreal("1.3")),
              xreal("-0.04424122856774921507064364207221350078493"), xreal("1e-35")));
}

TEST_CASE("build_effective: equally mixed Coulomb") {
  auto prob = build_effective(mixed_coulomb_spec(1, 1), 0);
  CHECK(prob.ell_eff == xreal(0));
  CHECK(prob.spin_orbit_term.empty());
  CHECK(close(prob.gamma.coefficient(Rational(-1)), xreal(-2), xreal("1e-40")));
  CHECK(close(prob.gamma.coefficient(Rational(0)), xreal(1), xreal("1e-40")));
  CHECK(prob.gamma.size() == 2);
}

TEST_CASE("build_effective: KG funnel state") {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(xreal("-0.26"), Rational(-1));
  s.scalar_part = PowerSum::monomial(xreal("0.10429"), Rational(1));
  s.mass = xreal("1.370");
  s.equation_kind = EquationKind::KleinGordon;
  s.kappa = -2;  // ell = 1
  auto prob = build_effective(s, 1);
  CHECK(close(prob.gamma.coefficient(Rational(2)), xreal("0.0108764041"), xreal("1e-35")));
  CHECK(close(prob.gamma.coefficient(Rational(1)), xreal("0.2857546"), xreal("1e-35")));
  CHECK(close(prob.gamma.coefficient(Rational(0)), xreal("1.8769"), xreal("1e-35")));
  CHECK(close(prob.ell_eff, xreal("0.9772948250095510302081741800665830343915"),
              xreal("1e-35")));
  CHECK(prob.spin_orbit_term.empty());
  CHECK(close(prob.vector_for_coupling.coefficient(Rational(-1)), xreal("-0.26"),
              xreal("1e-40")));
}

TEST_CASE("build_effective: free particle") {
  PotentialSpec s;
  s.mass = xreal(1);
  s.kappa = -1;
  auto prob = build_effective(s, 0);
  CHECK(prob.gamma.size() == 1);
  CHECK(prob.gamma.coefficient(Rational(0)) == xreal(1));
  CHECK(prob.ell_eff == xreal(0));
}

TEST_CASE("equal mixing kills U for both equations") {
  for (auto kind : {EquationKind::Dirac, EquationKind::KleinGordon}) {
    PotentialSpec s = mixed_coulomb_spec(xreal("1.5"), xreal("0.3"));
    s.equation_kind = kind;
    CHECK(build_y(s).empty());
    auto prob = build_effective(s, 1);
    CHECK(prob.spin_orbit_term.empty());
  }
}

TEST_CASE("ell_eff reduces to ell when A1 = A2") {
  PotentialSpec s = mixed_coulomb_spec(1, xreal("0.7"));
  for (int l : {0, 1, 2, 5}) {
    auto prob = build_effective(s, l);
    CHECK(close(prob.ell_eff, xreal(l), xreal("1e-45")));
  }
}

TEST_CASE("gamma matches the pointwise formula") {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(xreal("-0.26"), Rational(-1));
  s.scalar_part = PowerSum::monomial(xreal("0.105275"), Rational(1));
  s.mass = xreal("1.358");
  s.equation_kind = EquationKind::Dirac;
  s.kappa = 1;
  auto prob = build_effective(s, 1);
  const xreal a1 = s.coulomb_vector_strength();
  for (double rd : {0.3, 1.0, 2.5, 7.0}) {
    xreal r(rd);
    xreal v = s.vector_part.eval(r);
    xreal sc = s.scalar_part.eval(r);
    xreal u = prob.spin_orbit_term.eval(r);
    xreal direct = -v * v + a1 * a1 / (r * r) + sc * sc + 2 * s.mass * sc +
                   s.mass * s.mass + u;
    CHECK(close(prob.gamma.eval(r), direct, xreal("1e-30")));
  }
}

TEST_CASE("Coulomb collapse raises") {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(xreal("-2"), Rational(-1));
  s.mass = 1;
  s.kappa = -1;
  CHECK_THROWS_AS(build_effective(s, 0), std::domain_error);
  // boundary case (l+1/2)^2 = A1^2 is still admissible: ell_eff = -1/2
  PotentialSpec b;
  b.vector_part = PowerSum::monomial(xreal("-0.5"), Rational(-1));
  b.mass = 1;
  b.equation_kind = EquationKind::KleinGordon;
  b.kappa = -1;
  auto prob = build_effective(b, 0);
  CHECK(close(prob.ell_eff, xreal("-0.5"), xreal("1e-45")));
}
