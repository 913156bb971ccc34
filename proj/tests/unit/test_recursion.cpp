#include <doctest.h>

#include "pslet/exact.hpp"
#include "pslet/recursion.hpp"
#include "pslet/series.hpp"

using namespace pslet;

namespace {

EffectiveProblem from_spec(const PotentialSpec& s, int ell) {
  return build_effective(s, ell);
}

PotentialSpec mixed_coulomb(const xreal& m, const xreal& A, int kappa) {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(-A, Rational(-1));
  s.scalar_part = PowerSum::monomial(-A, Rational(-1));
  s.mass = m;
  s.kappa = kappa;
  return s;
}

xreal max_correction(const EnergySeries& s) {
  xreal m = 0;
  for (size_t i = 2; i < s.E_coeffs.size(); ++i) m = std::max(m, abs(s.E_coeffs[i]));
  return m;
}

bool close(const xreal& a, const xreal& b, const xreal& tol) {
  return abs(a - b) <= tol * (abs(a) + abs(b) + 1);
}

}  // namespace

TEST_CASE("order terms: upsilon structure") {
  auto prob = from_spec(mixed_coulomb(1, 1, -1), 0);
  auto pt = solve_expansion_point(prob, 0);
  std::vector<xreal> E = {pt.E_lead, xreal(0)};

  auto t0 = build_order_terms(pt, E, 0, MissingEnergy::TreatAsZero);
  REQUIRE(t0.upsilon.size() == 3);  // degree n+2
  CHECK(t0.upsilon[2] == pt.T[2]);
  CHECK(t0.upsilon[0] == (2 * pt.beta0 + 1) * pt.a[0]);
  CHECK(t0.upsilon[1] == xreal(0));

  auto t1 = build_order_terms(pt, E, 1, MissingEnergy::TreatAsZero);
  REQUIRE(t1.upsilon.size() == 4);
  CHECK(t1.upsilon[3] == pt.T[3]);
  CHECK(t1.upsilon[1] == (2 * pt.beta0 + 1) * xreal(-2));  // a_1 = -2

  // J even, K odd
  for (int n = 0; n <= 3; ++n) {
    auto t = build_order_terms(pt, E, n, MissingEnergy::TreatAsZero);
    for (size_t p = 0; p < t.J.size(); ++p)
      if (p % 2 == 1) CHECK(t.J[p] == xreal(0));
    for (size_t p = 0; p < t.K.size(); ++p)
      if (p % 2 == 0) CHECK(t.K[p] == xreal(0));
  }

  CHECK_THROWS_AS(build_order_terms(pt, E, 2, MissingEnergy::Strict),
                  std::logic_error);
}

TEST_CASE("mixed Coulomb: all corrections vanish identically") {
  for (auto A : {xreal("0.5"), xreal(1)}) {
    for (int ell : {0, 1}) {
      auto prob = from_spec(mixed_coulomb(1, A, -(ell + 1)), ell);
      auto res = energy_corrections(prob, 0, 8);
      xreal expect = exact::mixed_coulomb(1, A, 0, ell);
      CHECK(close(res.series.coeff(-1), expect, xreal("1e-22")));
      CHECK(max_correction(res.series) <= xreal("1e-22") * (abs(expect) + 1));
    }
  }
}

TEST_CASE("KG vector Coulomb A1 = 0.5: E = 1/sqrt(2), corrections vanish") {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(xreal("-0.5"), Rational(-1));
  s.mass = 1;
  s.equation_kind = EquationKind::KleinGordon;
  s.kappa = -1;
  auto res = energy_corrections(from_spec(s, 0), 0, 5);
  CHECK(close(res.series.coeff(-1),
              xreal("0.7071067811865475244008443621048490392848"), xreal("1e-25")));
  CHECK(max_correction(res.series) <= xreal("1e-22"));
  CHECK(close(partial_sum(res.series, 5),
              exact::kg_coulomb(exact::CoulombKind::Vector, 1, xreal("0.5"), 0, 0),
              xreal("1e-22")));
}

TEST_CASE("KG scalar Coulomb A2 = 0.75: closed form, corrections vanish") {
  PotentialSpec s;
  s.scalar_part = PowerSum::monomial(xreal("-0.75"), Rational(-1));
  s.mass = 1;
  s.equation_kind = EquationKind::KleinGordon;
  s.kappa = -1;
  auto res = energy_corrections(from_spec(s, 0), 0, 5);
  CHECK(close(res.series.coeff(-1),
              xreal("0.8447356655490887393463426137630469929292"), xreal("1e-25")));
  CHECK(max_correction(res.series) <= xreal("1e-22"));
}

TEST_CASE("Dirac oscillator: exact at leading order, corrections vanish") {
  // Gamma = m^2 B^2 r^2 + m^2 + mB(eps(2j+1) - beta), centrifugal from
  // Lambda(Lambda + eps beta); here m = B = 1.
  struct Case {
    double j2;  // 2j
    int eps, beta;
  };
  for (auto c : {Case{1, -1, 1}, Case{1, 1, 1}, Case{3, -1, 1}}) {
    const xreal lam = xreal(c.j2 + 1) / 2;  // j + 1/2
    const xreal cent = lam * (lam + c.eps * c.beta);
    const xreal ell_eff = -xreal("0.5") + sqrt(xreal("0.25") + cent);
    const xreal delta = c.eps * (c.j2 + 1) - c.beta;
    EffectiveProblem osc;
    osc.gamma = PowerSum({{xreal(1), Rational(2)}, {1 + delta, Rational(0)}});
    osc.ell_eff = ell_eff;
    osc.mass = 1;
    osc.quantum_ell = static_cast<int>(static_cast<double>(ell_eff) + 0.5);
    auto res = energy_corrections(osc, 0, 6);
    xreal expect = exact::dirac_oscillator(1, 1, 0, osc.quantum_ell,
                                           xreal(c.j2) / 2, c.eps, c.beta);
    CHECK(close(res.series.coeff(-1), expect, xreal("1e-22")));
    CHECK(max_correction(res.series) <= xreal("1e-22") * (abs(expect) + 1));
  }
}

TEST_CASE("KG funnel reference state (0,1)") {
  PotentialSpec s;
  s.vector_part = PowerSum::monomial(xreal("-0.26"), Rational(-1));
  s.scalar_part = PowerSum::monomial(xreal("0.10429"), Rational(1));
  s.mass = xreal("1.370");
  s.equation_kind = EquationKind::KleinGordon;
  s.kappa = -2;
  auto res = energy_corrections(from_spec(s, 1), 0, 14);
  // published sequence: 1.76167, 1.76064, 1.76037, 1.76033, ..., 1.76033
  CHECK(abs(partial_sum(res.series, 1) - xreal("1.76167")) < xreal("5e-5"));
  CHECK(abs(partial_sum(res.series, 2) - xreal("1.76064")) < xreal("5e-5"));
  CHECK(abs(partial_sum(res.series, 4) - xreal("1.76033")) < xreal("5e-5"));
  CHECK(abs(partial_sum(res.series, 14) - xreal("1.76033")) < xreal("5e-5"));
  CHECK(res.max_residual <= xreal("1e-20"));
}

TEST_CASE("E^(0) vanishes by construction of the shift") {
  PotentialSpec s;
  s.scalar_part = PowerSum::monomial(xreal("0.137"), Rational(1));
  s.mass = xreal("1.12");
  s.kappa = -1;
  auto res = energy_corrections(from_spec(s, 0), 0, 6);
  CHECK(res.series.coeff(0) == xreal(0));
  CHECK(res.series.n_corrections == 6);
}

TEST_CASE("KG kappa-sign independence") {
  PotentialSpec a;
  a.vector_part = PowerSum::monomial(xreal("-0.26"), Rational(-1));
  a.scalar_part = PowerSum::monomial(xreal("0.10429"), Rational(1));
  a.mass = xreal("1.370");
  a.equation_kind = EquationKind::KleinGordon;
  a.kappa = 1;  // kappa = l
  PotentialSpec b = a;
  b.kappa = -2;  // kappa = -(l+1)
  auto ra = energy_corrections(from_spec(a, 1), 0, 8);
  auto rb = energy_corrections(from_spec(b, 1), 0, 8);
  REQUIRE(ra.series.E_coeffs.size() == rb.series.E_coeffs.size());
  for (size_t i = 0; i < ra.series.E_coeffs.size(); ++i) {
    xreal scale = abs(ra.series.E_coeffs[i]) + abs(rb.series.E_coeffs[i]) + 1;
    CHECK(abs(ra.series.E_coeffs[i] - rb.series.E_coeffs[i]) <= xreal("1e-25") * scale);
  }
}

TEST_CASE("wave tables: D_{0,n,k} = 0 and empty A for k = 0") {
  PotentialSpec s;
  s.scalar_part = PowerSum::monomial(xreal("0.137"), Rational(1));
  s.mass = xreal("1.12");
  s.kappa = -1;
  auto res = energy_corrections(from_spec(s, 0), 0, 4);
  for (int n = 0; n <= 8; ++n) CHECK(res.wave.d(0, n) == xreal(0));
  for (auto& row : res.wave.A) CHECK(row.empty());
  // leading slope of the Gaussian: D_{1,0} = -omega/2
  CHECK(close(res.wave.d(1, 0), -res.point.omega / 2, xreal("1e-35")));
}

TEST_CASE("F polynomial node counts on linear-confinement states") {
  PotentialSpec s;
  s.scalar_part = PowerSum::monomial(xreal("0.137"), Rational(1));
  s.mass = xreal("1.12");
  for (int k : {0, 2}) {
    s.kappa = -1;
    auto res = energy_corrections(from_spec(s, 0), k, 6);
    Poly f = f_polynomial(res, 6);
    double span = 3.5 / std::sqrt(static_cast<double>(res.point.omega) / 2);
    double lo = -0.9 * std::sqrt(static_cast<double>(res.point.lbar));
    int changes = poly_sign_changes(f, std::max(-span, lo), span);
    CHECK(changes == k);
  }
}
