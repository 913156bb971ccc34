#include "pslet/expansion.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace pslet {

namespace {

struct PointData {
  xreal Q, E_lead, omega, lbar, f;
};

// Evaluates the closure residual f(r0) = Q(r0) - lbar(r0)^2 if the point
// admits a real Q, energy and frequency; nullopt otherwise.
std::optional<PointData> try_point(const EffectiveProblem& prob, int k,
                                   const xreal& r0, EnergyBranch branch) {
  const PowerSum& G = prob.gamma;
  const PowerSum& V = prob.vector_for_coupling;
  const PowerSum Gp = G.derivative();
  const PowerSum Vp = V.derivative();

  const xreal v0 = V.empty() ? xreal(0) : V.eval(r0);
  const xreal v1 = Vp.empty() ? xreal(0) : Vp.eval(r0);
  const xreal g0 = G.eval(r0);
  const xreal g1 = Gp.empty() ? xreal(0) : Gp.eval(r0);

  const xreal r3 = r0 * r0 * r0;
  const xreal h = r3 * (2 * v0 * v1 + g1 + r0 * v1 * v1);
  const xreal g = r3 * r3 * (g1 * g1 + 4 * v0 * v1 * g1 - 4 * g0 * v1 * v1);
  xreal disc = h * h - g;
  if (abs(disc) <= roundoff_scale() * (h * h + abs(g)))
    disc = 0;  // exact double root, e.g. V = 0
  else if (disc < 0)
    return std::nullopt;
  const xreal Q = (h + sqrt(disc)) / 2;
  if (Q <= 0) return std::nullopt;

  const xreal rad = v0 * v0 + g0 + Q / (r0 * r0);
  if (rad < 0) return std::nullopt;
  const xreal sign = branch == EnergyBranch::Plus ? 1 : -1;
  const xreal e_lead = v0 + sign * sqrt(rad);

  const xreal g2 = G.derivative(2).empty() ? xreal(0) : G.derivative(2).eval(r0);
  const xreal v2 = Vp.derivative().empty() ? xreal(0) : Vp.derivative().eval(r0);
  const xreal r4 = r0 * r0 * r0 * r0;
  const xreal w2 = 12 + (2 * r4 / Q) * g2 + (4 * r4 / Q) * e_lead * v2;
  if (w2 <= 0) return std::nullopt;
  const xreal omega = sqrt(w2);

  const xreal lbar = prob.ell_eff + (1 + (k + xreal(0.5)) * omega) / 2;
  return PointData{Q, e_lead, omega, lbar, Q - lbar * lbar};
}

}  // namespace

xreal q_of_r0(const EffectiveProblem& prob, const xreal& r0) {
  const PowerSum& G = prob.gamma;
  const PowerSum& V = prob.vector_for_coupling;
  const xreal v0 = V.empty() ? xreal(0) : V.eval(r0);
  const xreal v1 = V.empty() ? xreal(0) : V.derivative().eval(r0);
  const xreal g0 = G.eval(r0);
  const xreal g1 = G.derivative().empty() ? xreal(0) : G.derivative().eval(r0);
  const xreal r3 = r0 * r0 * r0;
  const xreal h = r3 * (2 * v0 * v1 + g1 + r0 * v1 * v1);
  const xreal g = r3 * r3 * (g1 * g1 + 4 * v0 * v1 * g1 - 4 * g0 * v1 * v1);
  xreal disc = h * h - g;
  if (abs(disc) <= roundoff_scale() * (h * h + abs(g)))
    disc = 0;
  else if (disc < 0)
    throw std::domain_error("q_of_r0: h^2 - g < 0, no real minimizing Q");
  return (h + sqrt(disc)) / 2;
}

xreal leading_energy(const EffectiveProblem& prob, const xreal& r0,
                     const xreal& Q, EnergyBranch branch) {
  const xreal v0 =
      prob.vector_for_coupling.empty() ? xreal(0) : prob.vector_for_coupling.eval(r0);
  const xreal rad = v0 * v0 + prob.gamma.eval(r0) + Q / (r0 * r0);
  if (rad < 0)
    throw std::domain_error("leading_energy: negative radicand");
  return v0 + (branch == EnergyBranch::Plus ? 1 : -1) * sqrt(rad);
}

xreal omega_of(const EffectiveProblem& prob, const xreal& r0, const xreal& Q,
               const xreal& E_lead) {
  const PowerSum g2ps = prob.gamma.derivative(2);
  const PowerSum v2ps = prob.vector_for_coupling.derivative(2);
  const xreal g2 = g2ps.empty() ? xreal(0) : g2ps.eval(r0);
  const xreal v2 = v2ps.empty() ? xreal(0) : v2ps.eval(r0);
  const xreal r4 = r0 * r0 * r0 * r0;
  const xreal w2 = 12 + (2 * r4 / Q) * g2 + (4 * r4 / Q) * E_lead * v2;
  if (w2 <= 0)
    throw std::domain_error(
        "omega_of: expansion point is not a well (omega^2 <= 0)");
  return sqrt(w2);
}

xreal beta_shift(int k, const xreal& omega) {
  if (k < 0) throw std::domain_error("beta_shift: k must be >= 0");
  return -(1 + (k + xreal(0.5)) * omega) / 2;
}

xreal length_scale_heuristic(const EffectiveProblem& prob, int k) {
  const xreal n_eff = xreal(prob.quantum_ell + k + 1);
  const xreal m_eff = prob.mass > 0 ? prob.mass : xreal(1);
  xreal scale = 1;
  // Coulombic: hydrogenic n^2 / (m Z).
  xreal z = -prob.vector_for_coupling.coefficient(Rational(-1));
  xreal g1 = -prob.gamma.coefficient(Rational(-1)) / (2 * m_eff);
  z = std::max(std::max(z, g1), xreal(1));
  scale = std::max(scale, n_eff * n_eff / (m_eff * z));
  // Confining power terms: turning-point scaling of c r^s.
  for (const auto& t : prob.gamma.terms()) {
    if (t.power.num() > 0 && t.coeff > 0) {
      xreal s = t.power.to_xreal();
      xreal cand = pow(n_eff * n_eff / (m_eff * t.coeff), 1 / (s + 2));
      scale = std::max(scale, cand);
    }
  }
  return scale;
}

ExpansionPoint solve_expansion_point(const EffectiveProblem& prob, int k,
                                     const ExpansionOptions& opts) {
  if (k < 0) throw std::domain_error("solve_expansion_point: k must be >= 0");
  const xreal scale = length_scale_heuristic(prob, k);
  const int n = opts.scan_points;
  const xreal lo = scale * xreal(opts.scan_lo);
  const xreal hi = scale * xreal(opts.scan_hi);
  const xreal ratio_log = log(hi / lo);

  struct Sample {
    xreal r;
    std::optional<PointData> d;
  };
  std::vector<Sample> samples;
  samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    xreal r = lo * exp(ratio_log * i / n);
    samples.push_back({r, try_point(prob, k, r, opts.branch)});
  }

  std::vector<xreal> roots;
  for (int i = 0; i <= n; ++i)
    if (samples[i].d && samples[i].d->f == 0) roots.push_back(samples[i].r);
  for (int i = 0; i < n; ++i) {
    const auto& a = samples[i];
    const auto& b = samples[i + 1];
    if (!a.d || !b.d) continue;
    if ((a.d->f < 0) == (b.d->f < 0)) continue;
    xreal rl = a.r, rh = b.r;
    bool lo_neg = a.d->f < 0;
    const xreal tol = roundoff_scale(8);
    for (int it = 0; it < 400 && (rh - rl) > tol * rh; ++it) {
      xreal mid = (rl + rh) / 2;
      auto d = try_point(prob, k, mid, opts.branch);
      if (!d) throw std::runtime_error("solve_expansion_point: invalid point inside bracket");
      if (d->f == 0) {
        rl = rh = mid;
        break;
      }
      if ((d->f < 0) == lo_neg)
        rl = mid;
      else
        rh = mid;
    }
    roots.push_back((rl + rh) / 2);
  }

  if (roots.empty())
    throw std::runtime_error(
        "solve_expansion_point: no root of Q - lbar^2 in the scan bracket");

  ExpansionPoint pt;
  if (roots.size() > 1) {
    std::sort(roots.begin(), roots.end());
    xreal best_e;
    xreal best_r = roots.front();
    bool first = true;
    for (auto& r : roots) {
      auto d = try_point(prob, k, r, opts.branch);
      if (!d) continue;
      if (first || d->E_lead < best_e) {
        best_e = d->E_lead;
        best_r = r;
        first = false;
      }
    }
    pt.warnings.push_back("multiple expansion-point roots; kept the one with minimal E^(-1)");
    roots = {best_r};
  }

  const xreal r0 = roots.front();
  auto d = try_point(prob, k, r0, opts.branch);
  if (!d) throw std::runtime_error("solve_expansion_point: converged point invalid");

  pt.r0 = r0;
  pt.Q = d->Q;
  pt.lbar = d->lbar;
  pt.omega = d->omega;
  pt.beta0 = beta_shift(k, d->omega);
  pt.E_lead = d->E_lead;
  pt.order_max = opts.order_max;
  pt.k = k;

  pt.b = prob.gamma.taylor(r0, opts.order_max);
  pt.c = prob.vector_for_coupling.empty()
             ? std::vector<xreal>(opts.order_max + 1, xreal(0))
             : prob.vector_for_coupling.taylor(r0, opts.order_max);
  pt.a.resize(opts.order_max + 1);
  pt.T.resize(opts.order_max + 1);
  const xreal rq = r0 * r0 / pt.Q;
  for (unsigned i = 0; i <= opts.order_max; ++i) {
    pt.a[i] = xreal(i % 2 == 0 ? 1 : -1) * xreal(i + 1);
    pt.T[i] = pt.a[i] + rq * pt.b[i];
  }

  // Stationarity identity: Q a1 + r0^2 b1 + 2 r0^2 E^(-1) c1 = 0 is
  // implied by the construction and must hold numerically.
  {
    xreal resid = abs(pt.Q * pt.a[1] + pt.r0 * pt.r0 * pt.b[1] +
                      2 * pt.r0 * pt.r0 * pt.E_lead * pt.c[1]);
    xreal scale = std::max(abs(pt.Q), pt.r0 * pt.r0 * abs(pt.b[1]));
    if (scale == 0) scale = 1;
    if (resid > xreal("1e-25") * scale) {
      if (opts.branch == EnergyBranch::Plus)
        throw std::runtime_error(
            "solve_expansion_point: stationarity residual exceeds 1e-25");
      pt.warnings.push_back(
          "stationarity residual large (minus branch with vector coupling)");
    }
  }

  // Minimum check: E^(-1)(r0; Q fixed) must be convex at the solution.
  {
    const xreal h = r0 * xreal(1e-6);
    auto e_at = [&](const xreal& r) {
      return leading_energy(prob, r, pt.Q, opts.branch);
    };
    xreal second = e_at(r0 + h) - 2 * e_at(r0) + e_at(r0 - h);
    if (opts.branch == EnergyBranch::Minus) second = -second;
    if (second < 0)
      pt.warnings.push_back("expansion point is not a local minimum of E^(-1)");
  }
  return pt;
}

xreal stationarity_residual(const ExpansionPoint& pt) {
  return abs(pt.Q * pt.a[1] + pt.r0 * pt.r0 * pt.b[1] +
             2 * pt.r0 * pt.r0 * pt.E_lead * pt.c[1]);
}

}  // namespace pslet
