#include "pslet/series.hpp"

#include <complex>
#include <stdexcept>

namespace pslet {

namespace {

// f_s = E^(s-1): coefficients of f(z) = sum_{n>=-1} E^(n) z^(n+1).
std::vector<xreal> f_coeffs(const EnergySeries& series) {
  return series.E_coeffs;
}

// Solves the j x j Hankel system for the denominator (b_0 = 1) and
// builds the numerator; returns {numerator, denominator}.
std::pair<std::vector<xreal>, std::vector<xreal>> pade_polys(
    const std::vector<xreal>& f, unsigned i, unsigned j) {
  auto fs = [&](int idx) { return idx >= 0 && idx < static_cast<int>(f.size())
                                      ? f[idx]
                                      : xreal(0); };
  std::vector<xreal> b(j + 1, xreal(0));
  b[0] = 1;
  if (j > 0) {
    std::vector<std::vector<xreal>> A(j, std::vector<xreal>(j, xreal(0)));
    std::vector<xreal> rhs(j, xreal(0));
    for (unsigned r = 0; r < j; ++r) {
      int row = static_cast<int>(i) + 1 + static_cast<int>(r);
      for (unsigned t = 1; t <= j; ++t) A[r][t - 1] = fs(row - static_cast<int>(t));
      rhs[r] = -fs(row);
    }
    // partial-pivot elimination
    for (unsigned step = 0; step < j; ++step) {
      unsigned piv = step;
      for (unsigned r = step + 1; r < j; ++r)
        if (abs(A[r][step]) > abs(A[piv][step])) piv = r;
      if (A[piv][step] == 0)
        throw std::runtime_error("pade: degenerate Hankel system");
      std::swap(A[step], A[piv]);
      std::swap(rhs[step], rhs[piv]);
      for (unsigned r = step + 1; r < j; ++r) {
        xreal fac = A[r][step] / A[step][step];
        if (fac == 0) continue;
        for (unsigned cidx = step; cidx < j; ++cidx)
          A[r][cidx] -= fac * A[step][cidx];
        rhs[r] -= fac * rhs[step];
      }
    }
    for (unsigned r = j; r-- > 0;) {
      xreal s = rhs[r];
      for (unsigned cidx = r + 1; cidx < j; ++cidx) s -= A[r][cidx] * b[cidx + 1];
      b[r + 1] = s / A[r][r];
    }
  }
  std::vector<xreal> a(i + 1, xreal(0));
  for (unsigned sdeg = 0; sdeg <= i; ++sdeg)
    for (unsigned t = 0; t <= std::min(sdeg, j); ++t)
      a[sdeg] += b[t] * fs(static_cast<int>(sdeg) - static_cast<int>(t));
  return {a, b};
}

xreal horner(const std::vector<xreal>& p, const xreal& z) {
  xreal v = 0;
  for (size_t idx = p.size(); idx-- > 0;) v = v * z + p[idx];
  return v;
}

// Durand-Kerner in double precision: adequate for flagging poles.
bool has_root_within(const std::vector<xreal>& den, double radius) {
  int deg = static_cast<int>(den.size()) - 1;
  while (deg > 0 && den[deg] == 0) --deg;
  if (deg <= 0) return false;
  std::vector<std::complex<double>> c(deg + 1);
  for (int idx = 0; idx <= deg; ++idx) c[idx] = static_cast<double>(den[idx]);
  std::vector<std::complex<double>> roots(deg);
  for (int idx = 0; idx < deg; ++idx)
    roots[idx] = std::polar(0.4 + 0.9 * radius, 0.9 * idx + 0.3);
  auto eval = [&](std::complex<double> z) {
    std::complex<double> v = 0;
    for (int idx = deg; idx >= 0; --idx) v = v * z + c[idx];
    return v;
  };
  for (int it = 0; it < 200; ++it) {
    double moved = 0;
    for (int idx = 0; idx < deg; ++idx) {
      std::complex<double> denom = c[deg];
      for (int jdx = 0; jdx < deg; ++jdx)
        if (jdx != idx) denom *= roots[idx] - roots[jdx];
      if (std::abs(denom) == 0) continue;
      std::complex<double> delta = eval(roots[idx]) / denom;
      roots[idx] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-13) break;
  }
  for (auto& r : roots)
    if (std::abs(r) <= radius * (1 + 1e-9)) return true;
  return false;
}

}  // namespace

xreal partial_sum(const EnergySeries& series, unsigned N) {
  if (N < 1 || N > series.n_corrections + 1)
    throw std::out_of_range("partial_sum: N outside [1, n_corrections+1]");
  const xreal z = 1 / series.lbar;
  xreal sum = 0;
  xreal zp = 1;
  for (unsigned idx = 0; idx <= N; ++idx) {  // idx = n+1, n = -1..N-1
    sum += series.E_coeffs.at(idx) * zp;
    zp *= z;
  }
  return sum;
}

xreal mass_of(const xreal& E) { return 2 * E; }

PadeEntry pade(const EnergySeries& series, unsigned i, unsigned j) {
  if (i + j + 1 > series.n_corrections)
    throw std::out_of_range("pade: i+j+1 exceeds available corrections");
  auto f = f_coeffs(series);
  auto [num, den] = pade_polys(f, i, j);
  const xreal z = 1 / series.lbar;
  xreal dv = horner(den, z);
  if (dv == 0) throw std::runtime_error("pade: denominator zero at 1/lbar");
  PadeEntry e;
  e.value = horner(num, z) / dv;
  e.pole_on_disc = has_root_within(den, static_cast<double>(z));
  return e;
}

PadeTable pade_table(const EnergySeries& series,
                     const std::vector<std::pair<unsigned, unsigned>>& requests) {
  PadeTable t;
  for (auto& [i, j] : requests) t.entries[{i, j}] = pade(series, i, j);
  return t;
}

PadeEntry pade_tail_convention(const EnergySeries& series, unsigned i, unsigned j) {
  if (i + j + 1 > series.n_corrections)
    throw std::out_of_range("pade: i+j+1 exceeds available corrections");
  // g(z) = sum_{n>=1} E^(n) z^(n+1); value = E^(-1) + [i/j]_g(1/lbar).
  std::vector<xreal> g = series.E_coeffs;
  g[0] = 0;
  auto [num, den] = pade_polys(g, i, j);
  const xreal z = 1 / series.lbar;
  xreal dv = horner(den, z);
  if (dv == 0) throw std::runtime_error("pade: denominator zero at 1/lbar");
  PadeEntry e;
  e.value = series.E_coeffs[0] + horner(num, z) / dv;
  e.pole_on_disc = has_root_within(den, static_cast<double>(z));
  return e;
}

std::vector<xreal> pade_series_coefficients(const EnergySeries& series,
                                            unsigned i, unsigned j) {
  auto f = f_coeffs(series);
  auto [num, den] = pade_polys(f, i, j);
  // series of num/den through order i+j by recursive division
  std::vector<xreal> out(i + j + 1, xreal(0));
  std::vector<xreal> rem = num;
  rem.resize(i + j + 1, xreal(0));
  for (unsigned idx = 0; idx <= i + j; ++idx) {
    out[idx] = rem[idx] / den[0];
    for (unsigned t = 0; t < den.size() && idx + t <= i + j; ++t)
      rem[idx + t] -= out[idx] * den[t];
  }
  return out;
}

std::optional<Stabilization> stabilize_sequence(const std::vector<xreal>& values,
                                                const xreal& rel_tol) {
  for (size_t idx = 0; idx + 2 < values.size(); ++idx) {
    const xreal& v = values[idx];
    xreal scale = abs(v);
    if (scale == 0) scale = 1;
    if (abs(values[idx + 1] - v) <= rel_tol * scale &&
        abs(values[idx + 2] - v) <= rel_tol * scale)
      return Stabilization{static_cast<unsigned>(idx + 1), v};
  }
  return std::nullopt;
}

Stabilization stabilization(const EnergySeries& series, const xreal& rel_tol) {
  if (rel_tol <= 0) throw std::domain_error("stabilization: rel_tol must be > 0");
  std::vector<xreal> vals;
  for (unsigned N = 1; N <= series.n_corrections + 1; ++N)
    vals.push_back(partial_sum(series, N));
  auto s = stabilize_sequence(vals, rel_tol);
  if (!s)
    throw std::runtime_error(
        "stabilization: series does not stabilize within available orders");
  return *s;
}

}  // namespace pslet
