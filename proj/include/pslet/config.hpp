#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pslet/effective_problem.hpp"
#include "pslet/expansion.hpp"
#include "pslet/shooting.hpp"

namespace pslet {

struct StateSelector {
  int k = 0;
  int ell = 0;
  std::optional<int> kappa;  // Dirac default: -(ell+1)

  int kappa_or_default() const { return kappa ? *kappa : -(ell + 1); }
};

// One batch run: equation, potential, states, expansion controls.
struct RunConfig {
  EquationKind equation = EquationKind::Dirac;
  xreal mass = 1;
  PowerSum vector_part;
  PowerSum scalar_part;
  std::vector<StateSelector> states;
  unsigned order = 14;
  unsigned precision_digits = kDefaultPrecisionDigits;
  std::vector<std::pair<unsigned, unsigned>> pade_requests;
  EnergyBranch branch = EnergyBranch::Plus;
  bool report_mass = false;
  double check_tol = 2e-3;
  ShootingConfig oracle;

  PotentialSpec spec_for(const StateSelector& s) const;
};

// Parses and validates the JSON config (schema 1). Coefficients and
// mass may be JSON numbers or decimal strings; strings are exact.
// Throws std::invalid_argument with field context on bad input.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

}  // namespace pslet
