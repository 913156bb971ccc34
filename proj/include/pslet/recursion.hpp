#pragma once

#include <map>
#include <vector>

#include "pslet/expansion.hpp"

namespace pslet {

// Dense polynomial in the shifted coordinate x, coefficient of x^i at
// index i. Small fixed-degree objects, extended precision throughout.
using Poly = std::vector<xreal>;

namespace poly {
Poly zero(size_t deg);
void add_scaled(Poly& a, const Poly& b, const xreal& f);
Poly mul(const Poly& a, const Poly& b);
Poly deriv(const Poly& a);
Poly shifted(const Poly& a, size_t s);  // * x^s
xreal max_abs(const Poly& a);
}  // namespace poly

// Per-order source terms of the master equation:
//   upsilon^(n), J^(n), K^(n) polynomial families and the scalar
//   eps^(n) built from products of energy coefficients.
struct OrderTerms {
  Poly upsilon;
  Poly J;
  Poly K;
  xreal eps = 0;
};

// Wavefunction coefficient tables:
//   U'_{k,l} odd part   U^(n)(x) = sum_p D[{p,n}] x^{2p-1}, D[{0,n}] = 0,
//   U'_{k,l} even part  G^(n)(x) = sum_p C[{p,n}] x^{2p},
//   F_{k,l}(x) = x^k + sum_n sum_{p<k} A[n][p] x^p lbar^{-n/2}.
struct WaveCoefficients {
  std::map<std::pair<int, int>, xreal> D;  // (p, n) -> D_{p,n,k}
  std::map<std::pair<int, int>, xreal> C;  // (p, n) -> C_{p,n,k}
  std::vector<std::vector<xreal>> A;       // A[n][p], p < k

  xreal d(int p, int n) const;
  xreal c(int p, int n) const;
};

// Energy coefficients E^(-1), E^(0), ..., E^(N) plus the state data
// needed to form partial sums E(N) = sum_{n=-1}^{N-1} E^(n) lbar^-(n+1).
struct EnergySeries {
  std::vector<xreal> E_coeffs;  // index i holds E^(i-1)
  xreal lbar = 0;
  xreal Q = 0;
  int k = 0;
  int ell = 0;
  int kappa = 0;
  unsigned n_corrections = 0;

  const xreal& coeff(int n) const { return E_coeffs.at(n + 1); }
};

struct RecursionResult {
  ExpansionPoint point;
  WaveCoefficients wave;
  EnergySeries series;
  xreal max_residual = 0;  // worst row-scaled residual over all orders
};

// Missing-energy policy for build_order_terms: Strict throws when a
// required E^(m) is absent; TreatAsZero is used internally while the
// newest coefficient is still unknown.
enum class MissingEnergy { Strict, TreatAsZero };

// Assembles upsilon^(n), J^(n), K^(n), eps^(n) for one order from the
// expansion point and the energies known so far.
OrderTerms build_order_terms(const ExpansionPoint& pt,
                             const std::vector<xreal>& E_known, int n,
                             MissingEnergy policy = MissingEnergy::Strict);

// Runs the order-by-order hierarchy up to delta-order 2N, determining
// D, C, A and E^(1..N). Residual tolerance is relative to the largest
// assembled term per row; violations throw.
RecursionResult solve_recursion(const EffectiveProblem& prob,
                                const ExpansionPoint& pt, unsigned N);

// Full pipeline: expansion point + recursion.
RecursionResult energy_corrections(const EffectiveProblem& prob, int k,
                                   unsigned N,
                                   const ExpansionOptions& opts = {});

// F_{k,l} partial-sum polynomial through delta-order n_orders, with the
// numeric lbar^{-n/2} factors folded in. Used for node-count checks.
Poly f_polynomial(const RecursionResult& res, unsigned n_orders);

// Sign changes of p on a uniform grid over [x_lo, x_hi].
int poly_sign_changes(const Poly& p, double x_lo, double x_hi, int samples = 4000);

}  // namespace pslet
