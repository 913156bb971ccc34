#pragma once

#include <string>
#include <vector>

#include "pslet/effective_problem.hpp"

namespace pslet {

// Branch of E^(-1) = V(r0) +/- sqrt(V^2 + Gamma + Q/r0^2). The plus
// branch is the bound state continuously connected to +m and is what
// every reference table uses.
enum class EnergyBranch { Plus, Minus };

// The solved expansion point together with the coefficient arrays that
// feed the order-by-order recursion:
//   a_n = (-1)^n (n+1),
//   b_n = Gamma^(n)(r0) r0^n / n!,
//   c_n = V^(n)(r0) r0^n / n!,
//   T_n = a_n + (r0^2/Q) b_n.
struct ExpansionPoint {
  xreal r0;
  xreal Q;
  xreal lbar;    // l' - beta0
  xreal beta0;
  xreal omega;
  xreal E_lead;  // E^(-1)
  std::vector<xreal> a, b, c, T;
  unsigned order_max = 30;
  int k = 0;
  std::vector<std::string> warnings;
};

struct ExpansionOptions {
  EnergyBranch branch = EnergyBranch::Plus;
  unsigned order_max = 30;
  // Geometric scan bracket [scan_lo, scan_hi] * length_scale.
  double scan_lo = 1e-3;
  double scan_hi = 1e3;
  int scan_points = 600;
};

// Q(r0) from the minimization of the leading energy:
//   2Q = h + sqrt(h^2 - g),
//   h = r0^3 [2 V V' + Gamma' + r0 V'^2],
//   g = r0^6 [Gamma'^2 + 4 V V' Gamma' - 4 Gamma V'^2].
// Throws std::domain_error when h^2 - g < 0 beyond roundoff.
xreal q_of_r0(const EffectiveProblem& prob, const xreal& r0);

// E^(-1) = V(r0) +/- sqrt(V^2 + Gamma + Q/r0^2).
xreal leading_energy(const EffectiveProblem& prob, const xreal& r0,
                     const xreal& Q, EnergyBranch branch);

// omega = sqrt(12 + (2 r0^4/Q) Gamma'' + (4 r0^4/Q) E^(-1) V'').
xreal omega_of(const EffectiveProblem& prob, const xreal& r0, const xreal& Q,
               const xreal& E_lead);

// beta0 = -[1 + (k+1/2) omega] / 2, the shift that kills E^(0).
xreal beta_shift(int k, const xreal& omega);

// Heuristic bracketing scale (hydrogenic / Airy scalings).
xreal length_scale_heuristic(const EffectiveProblem& prob, int k);

// Solves Q(r0) = lbar(r0)^2 for r0 by geometric scan plus bisection and
// fills every field of ExpansionPoint. With several roots, the one with
// the smallest E^(-1) wins and a warning is recorded.
ExpansionPoint solve_expansion_point(const EffectiveProblem& prob, int k,
                                     const ExpansionOptions& opts = {});

// |Q a_1 + r0^2 b_1 + 2 r0^2 E^(-1) c_1|, the stationarity residual that
// must vanish at the solved point.
xreal stationarity_residual(const ExpansionPoint& pt);

}  // namespace pslet
