#include <doctest.h>

#include "pslet/powerlaw.hpp"

using namespace pslet;

namespace {
bool close(const xreal& a, const xreal& b, const xreal& tol) {
  return abs(a - b) <= tol * (abs(a) + abs(b) + 1);
}
}  // namespace

TEST_CASE("nu = 2 reduces to the 3d oscillator: Ehat = 2(2k+l) + 3") {
  for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}}) {
    PowerLawCase c;
    c.nu = Rational(2);
    c.k = k;
    c.ell = l;
    auto res = reduced_eigenvalue(c, 6);
    xreal expect = xreal(2 * (2 * k + l) + 3);
    CHECK(close(ehat_partial(res.series, 1), expect, xreal("1e-22")));
    CHECK(close(ehat_partial(res.series, 7), expect, xreal("1e-22")));
  }
}

TEST_CASE("Martin potential ground state stabilizes near the reference") {
  PowerLawCase c;  // nu = 0.1 default
  auto res = reduced_eigenvalue(c, 10);
  // reference numeric value 1.2364; stabilized expansion 1.2358
  xreal e2 = ehat_partial(res.series, 2);
  CHECK(abs(e2 - xreal("1.2358")) < xreal("5e-4"));
}

TEST_CASE("Ehat is independent of (m, A, B0)") {
  PowerLawCase c1{Rational(1, 10), xreal("0.7"), xreal("0.2"), xreal("1.9"), 0, 1};
  PowerLawCase c2{Rational(1, 10), xreal("3.1"), xreal("-0.4"), xreal("0.6"), 0, 1};
  auto r1 = reduced_eigenvalue(c1, 6);
  auto r2 = reduced_eigenvalue(c2, 6);
  for (unsigned N = 1; N <= 7; ++N)
    CHECK(close(ehat_partial(r1.series, N), ehat_partial(r2.series, N),
                xreal("1e-30")));
}

TEST_CASE("squared-sum and squared-series conventions agree at convergence") {
  PowerLawCase c;
  c.ell = 1;
  auto res = reduced_eigenvalue(c, 12);
  CHECK(abs(ehat_partial(res.series, 12) - ehat_series_partial(res.series, 12)) <
        xreal("1e-6"));
}

TEST_CASE("energy relation roundtrip") {
  PowerLawCase c{Rational(1, 10), xreal("0.9"), xreal("0.15"), xreal("1.2"), 0, 0};
  // Ehat = 0 at E = m + 2 B0
  CHECK(close(ehat_of_energy(c, c.m + 2 * c.B0), xreal(0), xreal("1e-40")));
  CHECK(close(invert_energy(c, xreal(0)), c.m + 2 * c.B0, xreal("1e-20")));

  for (double e : {1.8, 2.4, 5.0}) {
    xreal E(e);
    xreal ehat = ehat_of_energy(c, E);
    CHECK(close(invert_energy(c, ehat), E, xreal("1e-20")));
  }

  // Table-reference Ehat on the monotone branch inverts consistently
  PowerLawCase jt{Rational(1, 10), xreal("0.5"), xreal("0.1"), xreal("1.0"), 1, 0};
  xreal E = invert_energy(jt, xreal("1.3347"));
  CHECK(E > jt.m + 2 * jt.B0);
  CHECK(close(ehat_of_energy(jt, E), xreal("1.3347"), xreal("1e-20")));

  CHECK_THROWS_AS(invert_energy(c, xreal(-1)), std::domain_error);
}
