#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pslet/recursion.hpp"

namespace pslet {

// E(N) = sum_{n=-1}^{N-1} E^(n) lbar^-(n+1); valid for 1 <= N <= n_corrections+1.
xreal partial_sum(const EnergySeries& series, unsigned N);

// M = 2E, the quark-antiquark mass prescription.
xreal mass_of(const xreal& E);

struct PadeEntry {
  xreal value;        // [i/j](1/lbar), energy convention
  bool pole_on_disc;  // denominator root within |z| <= 1/lbar
};

// [i/j] rational approximant of f(z) = sum_{n>=-1} E^(n) z^(n+1),
// evaluated at z = 1/lbar. Denominator from the Hankel linear system at
// working precision; throws on a degenerate system.
PadeEntry pade(const EnergySeries& series, unsigned i, unsigned j);

struct PadeTable {
  std::map<std::pair<unsigned, unsigned>, PadeEntry> entries;
};

PadeTable pade_table(const EnergySeries& series,
                     const std::vector<std::pair<unsigned, unsigned>>& requests);

// Alternative convention kept for diagnostics: leading term exact,
// Pade applied only to the correction tail sum_{n>=1} E^(n) z^(n+1).
PadeEntry pade_tail_convention(const EnergySeries& series, unsigned i, unsigned j);

// Re-expansion of [i/j] as a power series through order i+j (for the
// Pade defining property check).
std::vector<xreal> pade_series_coefficients(const EnergySeries& series,
                                            unsigned i, unsigned j);

// Smallest N with |E(N+1)-E(N)| <= tol |E(N)| and |E(N+2)-E(N)| <= tol |E(N)|.
struct Stabilization {
  unsigned N_star;
  xreal value;
};
Stabilization stabilization(const EnergySeries& series, const xreal& rel_tol);

// Same two-step window rule on an arbitrary value sequence (index i
// holds the N = i+1 partial value). nullopt when nothing stabilizes.
std::optional<Stabilization> stabilize_sequence(const std::vector<xreal>& values,
                                                const xreal& rel_tol);

inline constexpr double kDefaultStabilizationTol = 5e-5;

}  // namespace pslet
