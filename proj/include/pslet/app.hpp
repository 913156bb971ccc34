#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pslet/config.hpp"
#include "pslet/series.hpp"
#include "pslet/tables.hpp"

namespace pslet::app {

// Exit codes: 0 ok, 1 validation error, 2 solver failure, 3 check failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitCheck = 3;

struct StateReport {
  StateSelector sel;
  int kappa = 0;
  bool ok = false;
  std::string error;
  xreal r0, lbar, omega, E_lead;
  std::vector<xreal> partials;  // partials[i] = E(i+1), i = 0..order-1
  struct PadeValue {
    unsigned i, j;
    xreal value;
    bool pole_on_disc;
  };
  std::vector<PadeValue> pades;
  std::optional<std::pair<unsigned, xreal>> stab;
  std::optional<OracleResult> oracle;
  std::optional<xreal> exact;
  std::vector<std::string> warnings;
};

// Runs every state of the config (optionally in parallel) and returns
// reports ordered by (k, ell, kappa).
std::vector<StateReport> run_config_states(const RunConfig& cfg, unsigned jobs,
                                           bool with_oracle, bool with_exact);

// Closed-form value when the configured case has one (equally mixed
// Coulomb; single-coupling Klein-Gordon Coulomb).
std::optional<xreal> closed_form_value(const RunConfig& cfg,
                                       const StateSelector& s);

struct TableValue {
  int k = 0, ell = 0;
  std::string label;       // "M(14)", "E(4)", "M[4,4]", "Ehat(2)"
  xreal computed;
  std::optional<double> reference;
  bool checked = false;
  double tol = 5e-4;
  bool pass = true;
  std::string note;
};

struct TableReport {
  int id = 0;
  std::string title;
  std::vector<TableValue> values;
  int check_failures = 0;
  std::vector<std::string> notes;
};

TableReport compute_table_report(int id, unsigned jobs,
                                 unsigned precision_override = 0);

// CLI entry point; argv-style arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pslet::app
