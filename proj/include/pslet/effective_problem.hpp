#pragma once

#include <optional>

#include "pslet/power_sum.hpp"

namespace pslet {

enum class EquationKind { KleinGordon, Dirac };

// Physical input: Lorentz-vector part V(r), Lorentz-scalar part S(r),
// mass, equation selector, and the spin-orbit quantum number kappa
// (kappa = -(l+1) for j = l+1/2, kappa = l for j = l-1/2, kappa != 0).
struct PotentialSpec {
  PowerSum vector_part;
  PowerSum scalar_part;
  xreal mass;
  EquationKind equation_kind = EquationKind::Dirac;
  int kappa = -1;

  // Coulomb strengths: A1 (A2) is minus the 1/r coefficient of V (S).
  xreal coulomb_vector_strength() const;
  xreal coulomb_scalar_strength() const;

  // Orbital quantum number implied by kappa.
  int ell() const { return kappa > 0 ? kappa : -kappa - 1; }
};

// The reduced one-dimensional eigenproblem
//   [ -d^2/dr^2 + l'(l'+1)/r^2 + Gamma(r) + 2 E V(r) ] Phi = E^2 Phi .
struct EffectiveProblem {
  PowerSum gamma;                // Gamma = -V_r + S_r + 2mS + m^2 + U
  PowerSum vector_for_coupling;  // full V, enters through 2EV
  xreal ell_eff;                 // l'
  PowerSum spin_orbit_term;      // U; empty for Klein-Gordon
  xreal mass;
  int quantum_ell = 0;
};

// y(r) = V(r) - S(r).
PowerSum build_y(const PotentialSpec& spec);

// U = (lambda/4m) [ y'' - 2 kappa y'/r + 3 y'^2 / 4m ]; empty when
// lambda = 0 (Klein-Gordon) or y vanishes identically.
PowerSum build_U(const PowerSum& y, int kappa, const xreal& m, int lambda);

// Assembles the reduced problem with the Coulomb rescaling
// V_r = V^2 - A1^2/r^2, S_r = S^2 - A2^2/r^2 and
// l' = -1/2 + sqrt((l+1/2)^2 - A1^2 + A2^2).
// Throws std::domain_error on Coulomb collapse ((l+1/2)^2 - A1^2 + A2^2 < 0).
EffectiveProblem build_effective(const PotentialSpec& spec, int ell);

// Convenience: ell taken from spec.kappa.
EffectiveProblem build_effective(const PotentialSpec& spec);

}  // namespace pslet
