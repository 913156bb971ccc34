#pragma once

#include "pslet/real.hpp"

namespace pslet {
namespace exact {

// Equally mixed Coulomb, V = S = -A/r (Dirac or Klein-Gordon):
//   E = m [1 - 2A^2 / ((k+l+1)^2 + A^2)].
xreal mixed_coulomb(const xreal& m, const xreal& A, int k, int ell);

enum class CoulombKind { Vector, Scalar };

// Klein-Gordon with a single Coulomb coupling:
//   vector: E = m [1 + A1^2/n1^2]^(-1/2), n1 = k + 1/2 + sqrt((l+1/2)^2 - A1^2)
//   scalar: E = s m [1 - A2^2/n2^2]^(1/2), n2 = k + 1/2 + sqrt((l+1/2)^2 + A2^2)
xreal kg_coulomb(CoulombKind kind, const xreal& m, const xreal& A, int k,
                 int ell, int energy_sign = +1);

// Dirac oscillator: E^2 = m^2 + 2mB(N+3/2) + mB(eps(2j+1) - beta),
// N = 2k + l. beta_sign is the +-1 the source leaves unspecified.
xreal dirac_oscillator(const xreal& m, const xreal& B, int k, int ell,
                       const xreal& j, int eps, int beta_sign,
                       int energy_sign = +1);

// Dirac with a single Coulomb coupling via the similarity-transformed
// route, s = +-1:
//   vector: E = m [1 + A1^2/Q]^(-1/2), Q = (k+1/2+s/2+sqrt(kappa^2-A1^2))^2
//   scalar: E = s_E m [1 - A2^2/Q]^(1/2), Q = (k+1/2+s/2+sqrt(kappa^2+A2^2))^2
xreal dirac_coulomb(CoulombKind kind, const xreal& m, const xreal& A, int k,
                    int kappa, int s, int energy_sign = +1);

}  // namespace exact
}  // namespace pslet
