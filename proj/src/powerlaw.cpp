#include "pslet/powerlaw.hpp"

#include <stdexcept>

#include "pslet/series.hpp"

namespace pslet {

RecursionResult reduced_eigenvalue(const PowerLawCase& c, unsigned N) {
  if (c.nu.to_double() <= 0 || c.A <= 0)
    throw std::domain_error("reduced_eigenvalue: need nu > 0 and A > 0");
  EffectiveProblem prob;
  prob.gamma = PowerSum::monomial(xreal(1), c.nu);
  prob.ell_eff = xreal(c.ell);
  prob.mass = 0;
  prob.quantum_ell = c.ell;
  RecursionResult res = energy_corrections(prob, c.k, N);
  res.series.ell = c.ell;
  return res;
}

xreal ehat_partial(const EnergySeries& series, unsigned N) {
  const xreal e = partial_sum(series, N);
  return e * e;
}

xreal ehat_series_partial(const EnergySeries& series, unsigned N) {
  // Cauchy square of f(z) = sum E^(n) z^(n+1) through z^N at z = 1/lbar.
  if (N + 1 > series.E_coeffs.size())
    throw std::out_of_range("ehat_series_partial: N exceeds available orders");
  const xreal z = 1 / series.lbar;
  xreal sum = 0;
  xreal zp = 1;
  for (unsigned s = 0; s <= N; ++s) {
    xreal cs = 0;
    for (unsigned p = 0; p <= s; ++p)
      cs += series.E_coeffs[p] * series.E_coeffs[s - p];
    sum += cs * zp;
    zp *= z;
  }
  return sum;
}

xreal ehat_of_energy(const PowerLawCase& c, const xreal& E) {
  if (E <= -c.m) throw std::domain_error("ehat_of_energy: E must exceed -m");
  const xreal nu = c.nu.to_xreal();
  const xreal scale = pow((E + c.m) * pow(2 * c.A, -2 / nu), nu / (nu + 2));
  return (E - c.m - 2 * c.B0) * scale;
}

xreal invert_energy(const PowerLawCase& c, const xreal& ehat) {
  if (ehat < 0)
    throw std::domain_error("invert_energy: negative Ehat not on the bound branch");
  xreal lo = c.m + 2 * c.B0;  // zero of the first factor
  xreal step = std::max(abs(lo), xreal(1));
  xreal hi = lo + step;
  int guard = 0;
  while (ehat_of_energy(c, hi) < ehat) {
    hi = lo + (hi - lo) * 2;
    if (++guard > 200)
      throw std::runtime_error("invert_energy: no root in expanded bracket");
  }
  const xreal tol = xreal("1e-25");
  for (int it = 0; it < 400 && (hi - lo) > tol * abs(hi); ++it) {
    xreal mid = (lo + hi) / 2;
    if (ehat_of_energy(c, mid) < ehat)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace pslet
