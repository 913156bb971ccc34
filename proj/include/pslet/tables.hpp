#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pslet/config.hpp"

namespace pslet {

// Built-in reference datasets (published benchmark tables for the
// linear-scalar, funnel and power-law quarkonium models). cmd_table
// recomputes each and prints computed vs reference side by side.
struct ReferenceTable {
  enum class Kind {
    MassSeries,     // rows M(N) = 2 E(N); reference numeric column
    MassPade,       // stabilized M(N) plus a Pade entry per state
    EnergySeries,   // rows E(N)
    EhatStabilized  // reduced power-law eigenvalue at stabilization
  };

  struct SeriesRef {
    int N;
    double value;
    bool checked;  // acceptance-checked vs computed (known misprints excluded)
    double tol = 5e-4;
  };

  struct Entry {
    int k = 0;
    int ell = 0;
    std::vector<SeriesRef> series;          // M(N) or E(N) or Ehat(N*)
    std::optional<double> numeric_ref;      // independent integration column
    std::optional<double> hbar_ref;         // hbar-expansion column
    std::optional<std::pair<int, int>> pade_ij;
    std::optional<double> pade_ref;
    bool pade_checked = false;
    std::optional<double> one_over_n_ref;   // shifted 1/N column
  };

  int id = 0;
  Kind kind = Kind::MassSeries;
  std::string title;
  RunConfig config;                  // potential, states, order
  std::optional<Rational> powerlaw_nu;  // set for the reduced power-law table
  std::vector<Entry> entries;
};

// Built fresh per call so coefficients pick up the active precision.
ReferenceTable reference_table(int id);  // 1..6, throws otherwise

}  // namespace pslet
