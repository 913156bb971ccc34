#include "pslet/exact.hpp"

#include <stdexcept>

namespace pslet {
namespace exact {

xreal mixed_coulomb(const xreal& m, const xreal& A, int k, int ell) {
  if (m <= 0 || A < 0) throw std::domain_error("mixed_coulomb: need m > 0, A >= 0");
  const xreal n = xreal(k + ell + 1);
  return m * (1 - 2 * A * A / (n * n + A * A));
}

xreal kg_coulomb(CoulombKind kind, const xreal& m, const xreal& A, int k,
                 int ell, int energy_sign) {
  const xreal half(0.5);
  const xreal lph = ell + half;
  if (kind == CoulombKind::Vector) {
    const xreal rad = lph * lph - A * A;
    if (rad < 0)
      throw std::domain_error("kg_coulomb: supercritical vector coupling");
    const xreal n1 = k + half + sqrt(rad);
    return m / sqrt(1 + A * A / (n1 * n1));
  }
  const xreal n2 = k + half + sqrt(lph * lph + A * A);
  return energy_sign * m * sqrt(1 - A * A / (n2 * n2));
}

xreal dirac_oscillator(const xreal& m, const xreal& B, int k, int ell,
                       const xreal& j, int eps, int beta_sign,
                       int energy_sign) {
  if (m <= 0 || B < 0) throw std::domain_error("dirac_oscillator: need m > 0, B >= 0");
  if (eps != 1 && eps != -1) throw std::domain_error("dirac_oscillator: eps must be +-1");
  const xreal Nq = xreal(2 * k + ell);
  const xreal e2 = m * m + 2 * m * B * (Nq + xreal(1.5)) +
                   m * B * (eps * (2 * j + 1) - beta_sign);
  if (e2 < 0) throw std::domain_error("dirac_oscillator: negative E^2");
  return energy_sign * sqrt(e2);
}

xreal dirac_coulomb(CoulombKind kind, const xreal& m, const xreal& A, int k,
                    int kappa, int s, int energy_sign) {
  if (s != 1 && s != -1) throw std::domain_error("dirac_coulomb: s must be +-1");
  const xreal half(0.5);
  const xreal k2 = xreal(kappa) * xreal(kappa);
  if (kind == CoulombKind::Vector) {
    const xreal rad = k2 - A * A;
    if (rad < 0)
      throw std::domain_error("dirac_coulomb: supercritical vector coupling");
    const xreal root = k + half + s * half + sqrt(rad);
    const xreal Q = root * root;
    return m / sqrt(1 + A * A / Q);
  }
  const xreal root = k + half + s * half + sqrt(k2 + A * A);
  const xreal Q = root * root;
  return energy_sign * m * sqrt(1 - A * A / Q);
}

}  // namespace exact
}  // namespace pslet
