#include <doctest.h>

#include "pslet/exact.hpp"

using namespace pslet;
using namespace pslet::exact;

namespace {
bool close(const xreal& a, const xreal& b, const xreal& tol) {
  return abs(a - b) <= tol * (abs(a) + abs(b) + 1);
}
}  // namespace

TEST_CASE("mixed Coulomb closed form") {
  CHECK(mixed_coulomb(1, 1, 0, 0) == xreal(0));
  CHECK(close(mixed_coulomb(1, xreal("1e-12"), 0, 0), xreal(1), xreal("1e-20")));
  CHECK(close(mixed_coulomb(2, 1, 1, 0), xreal("1.2"), xreal("1e-40")));
  // depends on k and ell only through k + ell
  for (int total = 1; total <= 4; ++total)
    for (int k = 0; k <= total; ++k)
      CHECK(mixed_coulomb(xreal("1.3"), xreal("0.8"), k, total - k) ==
            mixed_coulomb(xreal("1.3"), xreal("0.8"), 0, total));
}

TEST_CASE("KG Coulomb closed forms") {
  CHECK(close(kg_coulomb(CoulombKind::Vector, 1, xreal("0.5"), 0, 0),
              xreal("0.7071067811865475244008443621048490392848"), xreal("1e-35")));
  CHECK(kg_coulomb(CoulombKind::Scalar, 1, 0, 0, 0) == xreal(1));
  CHECK(close(kg_coulomb(CoulombKind::Scalar, 1, xreal("0.75"), 0, 0),
              xreal("0.8447356655490887393463426137630469929292"), xreal("1e-35")));
  CHECK(close(kg_coulomb(CoulombKind::Scalar, 1, xreal("0.75"), 0, 0, -1),
              xreal("-0.8447356655490887393463426137630469929292"), xreal("1e-35")));
  CHECK_THROWS_AS(kg_coulomb(CoulombKind::Vector, 1, 2, 0, 0), std::domain_error);

  // strictly decreasing in A1, exact value m at A1 = 0
  CHECK(kg_coulomb(CoulombKind::Vector, xreal(2), 0, 1, 1) == xreal(2));
  xreal last = 2;
  for (double a = 0.1; a < 1.4; a += 0.2) {
    xreal e = kg_coulomb(CoulombKind::Vector, 2, xreal(a), 1, 1);
    CHECK(e < last);
    last = e;
  }
}

TEST_CASE("Dirac oscillator closed form") {
  CHECK(close(dirac_oscillator(xreal("1.3"), xreal("1e-14"), 0, 0, xreal("0.5"), -1, 1),
              xreal("1.3"), xreal("1e-13")));
  CHECK(dirac_oscillator(1, 1, 0, 0, xreal("0.5"), -1, 1) == xreal(1));
  // E^2 = m^2 + 2mB(2k+l+3/2) + mB(eps(2j+1) - beta)
  xreal e = dirac_oscillator(1, 1, 1, 2, xreal("2.5"), 1, 1);
  CHECK(close(e * e, xreal(1 + 2 * (4 + 1.5) + (6 - 1)), xreal("1e-40")));
  CHECK_THROWS_AS(dirac_oscillator(1, 1, 0, 0, xreal("0.5"), 2, 1), std::domain_error);
}

TEST_CASE("Dirac Coulomb closed forms (similarity route)") {
  CHECK(dirac_coulomb(CoulombKind::Vector, xreal("0.9"), 0, 0, -1, 1) == xreal("0.9"));
  CHECK(close(dirac_coulomb(CoulombKind::Vector, 1, xreal("0.5"), 0, -1, 1),
              xreal("0.9659258262890682867497431997288973676339"), xreal("1e-35")));
  CHECK(close(dirac_coulomb(CoulombKind::Scalar, 1, 1, 0, -1, 1),
              xreal("0.9101797211244546826087155156449371392404"), xreal("1e-35")));
  // s = -1, k = 0 reproduces the textbook ground state m sqrt(1 - A^2)/|kappa|
  xreal a("0.5");
  CHECK(close(dirac_coulomb(CoulombKind::Vector, 1, a, 0, -1, -1),
              sqrt(1 - a * a), xreal("1e-35")));
  CHECK_THROWS_AS(dirac_coulomb(CoulombKind::Vector, 1, 2, 0, -1, 1),
                  std::domain_error);
  CHECK_THROWS_AS(dirac_coulomb(CoulombKind::Vector, 1, 1, 0, -1, 2),
                  std::domain_error);
}
