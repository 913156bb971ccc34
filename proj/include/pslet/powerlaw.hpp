#pragma once

#include "pslet/recursion.hpp"

namespace pslet {

// Equally mixed power-law potential V = S = A r^nu + B0 (nu = 0.1 is
// the Martin potential). Reduces to the dimensionless problem
//   [-d^2/dq^2 + l(l+1)/q^2 + q^nu] Omega = Ehat Omega
// whose eigenvalue relates back to the Dirac energy through
//   Ehat = (E - m - 2 B0) [(E + m) (2A)^(-2/nu)]^(nu/(nu+2)).
struct PowerLawCase {
  Rational nu{1, 10};
  xreal A = 1;
  xreal B0 = 0;
  xreal m = 1;
  int k = 0;
  int ell = 0;
};

// Runs the expansion on the reduced problem. The engine's energy
// variable eps satisfies Ehat = eps^2.
RecursionResult reduced_eigenvalue(const PowerLawCase& c, unsigned N);

// Ehat(N) = eps(N)^2, the squared partial sum.
xreal ehat_partial(const EnergySeries& series, unsigned N);

// Alternative reading kept for diagnostics: partial sums of the formal
// series of eps(z)^2 through z^N, evaluated at z = 1/lbar.
xreal ehat_series_partial(const EnergySeries& series, unsigned N);

// Direct evaluation of the energy relation.
xreal ehat_of_energy(const PowerLawCase& c, const xreal& E);

// Inverts the energy relation for E > m + 2 B0 (the monotone branch)
// by bracketing and bisection.
xreal invert_energy(const PowerLawCase& c, const xreal& ehat);

}  // namespace pslet
