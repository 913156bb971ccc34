#pragma once

#include <vector>

#include "pslet/effective_problem.hpp"

namespace pslet {

// Brute-force eigenvalue solver for the same reduced radial equation
// the expansion solves,
//   -Phi'' + [l'(l'+1)/r^2 + Gamma(r) + 2 E V(r)] Phi = E^2 Phi ,
// in plain double precision, independent of the extended-precision
// stack. Fixed-step RK4 on a logarithmic mesh, node-count bisection in
// the trial energy.
struct ShootingConfig {
  double r_min = 0;          // 0: automatic
  double r_max = 0;          // 0: automatic (10x outer turning point)
  long steps = 100000;       // >= 10^4
  double bisection_tol = 1e-12;
  std::pair<double, double> energy_bracket{0, 0};  // (0,0): automatic
};

struct OracleResult {
  double E_num = 0;
  int nodes = 0;
  bool matched = false;          // tail below 1e-8 of the peak amplitude
  double mesh_halving_delta = 0; // |E(2x steps) - E_num|
};

// Double-precision view of an EffectiveProblem.
struct ShootingProblem {
  std::vector<std::pair<double, double>> gamma;  // (coeff, power)
  std::vector<std::pair<double, double>> vterm;
  double ell_eff = 0;
  double mass = 0;

  static ShootingProblem from(const EffectiveProblem& prob);
  double gamma_at(double r) const;
  double v_at(double r) const;
};

// Number of strict sign changes in a sample sequence (endpoints are the
// caller's business; zeros are skipped).
int count_nodes(const std::vector<double>& samples);

OracleResult shoot_eigenvalue(const EffectiveProblem& prob, int k,
                              const ShootingConfig& cfg = {});
OracleResult shoot_eigenvalue(const ShootingProblem& prob, int k,
                              const ShootingConfig& cfg = {});

}  // namespace pslet
