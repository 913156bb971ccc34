#include "pslet/recursion.hpp"

#include <sstream>
#include <stdexcept>

namespace pslet {

namespace poly {

Poly zero(size_t deg) { return Poly(deg + 1, xreal(0)); }

void add_scaled(Poly& a, const Poly& b, const xreal& f) {
  if (a.size() < b.size()) a.resize(b.size(), xreal(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += f * b[i];
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, xreal(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly deriv(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * xreal(i);
  return out;
}

Poly shifted(const Poly& a, size_t s) {
  Poly out(a.size() + s, xreal(0));
  for (size_t i = 0; i < a.size(); ++i) out[i + s] = a[i];
  return out;
}

xreal max_abs(const Poly& a) {
  xreal m = 0;
  for (auto& c : a) m = std::max(m, abs(c));
  return m;
}

}  // namespace poly

xreal WaveCoefficients::d(int p, int n) const {
  auto it = D.find({p, n});
  return it == D.end() ? xreal(0) : it->second;
}

xreal WaveCoefficients::c(int p, int n) const {
  auto it = C.find({p, n});
  return it == C.end() ? xreal(0) : it->second;
}

namespace {

xreal energy_at(const std::vector<xreal>& E, int n, MissingEnergy policy) {
  // E[i] holds E^(i-1); valid n from -1 upward.
  const int idx = n + 1;
  if (idx < 0 || idx >= static_cast<int>(E.size())) {
    if (policy == MissingEnergy::Strict) {
      std::ostringstream os;
      os << "build_order_terms: required energy coefficient E^(" << n
         << ") is not available";
      throw std::logic_error(os.str());
    }
    return xreal(0);
  }
  return E[idx];
}

// Per-order linear solver: rows indexed by x-power, columns by unknown.
// Rectangular (rows >= cols), consistent by construction; solved by
// full-pivot elimination with a residual check on every row.
struct RectSolver {
  std::vector<Poly> cols;
  Poly rhs;
  size_t rows = 0;

  std::vector<xreal> solve(int order_index, xreal* max_rel_residual) {
    const size_t ncol = cols.size();
    std::vector<std::vector<xreal>> A(rows, std::vector<xreal>(ncol, xreal(0)));
    std::vector<xreal> b(rows, xreal(0));
    for (size_t j = 0; j < ncol; ++j)
      for (size_t i = 0; i < cols[j].size() && i < rows; ++i)
        A[i][j] = cols[j][i];
    for (size_t i = 0; i < rhs.size() && i < rows; ++i) b[i] = rhs[i];

    auto A0 = A;
    auto b0 = b;

    std::vector<size_t> colperm(ncol);
    for (size_t j = 0; j < ncol; ++j) colperm[j] = j;
    std::vector<size_t> rowidx(rows);
    for (size_t i = 0; i < rows; ++i) rowidx[i] = i;

    for (size_t step = 0; step < ncol; ++step) {
      xreal piv = 0;
      size_t pr = step, pc = step;
      for (size_t i = step; i < rows; ++i)
        for (size_t j = step; j < ncol; ++j)
          if (abs(A[i][j]) > piv) {
            piv = abs(A[i][j]);
            pr = i;
            pc = j;
          }
      if (piv == 0) {
        std::ostringstream os;
        os << "solve_order: singular system at order " << order_index
           << " (offending x-power " << rowidx[step] << ")";
        throw std::runtime_error(os.str());
      }
      std::swap(A[step], A[pr]);
      std::swap(b[step], b[pr]);
      std::swap(rowidx[step], rowidx[pr]);
      for (auto& row : A) std::swap(row[step], row[pc]);
      std::swap(colperm[step], colperm[pc]);
      for (size_t i = step + 1; i < rows; ++i) {
        if (A[i][step] == 0) continue;
        xreal f = A[i][step] / A[step][step];
        A[i][step] = 0;
        for (size_t j = step + 1; j < ncol; ++j) A[i][j] -= f * A[step][j];
        b[i] -= f * b[step];
      }
    }

    std::vector<xreal> x(ncol, xreal(0));
    for (size_t ii = ncol; ii-- > 0;) {
      xreal s = b[ii];
      for (size_t j = ii + 1; j < ncol; ++j) s -= A[ii][j] * x[j];
      x[ii] = s / A[ii][ii];
    }
    std::vector<xreal> sol(ncol);
    for (size_t j = 0; j < ncol; ++j) sol[colperm[j]] = x[j];

    // Residuals over the original system, relative to the largest term
    // magnitude of the whole order relation.
    const xreal tol = xreal("1e-20");
    std::vector<xreal> resid(rows);
    xreal scale = 0;
    for (size_t i = 0; i < rows; ++i) {
      xreal r = b0[i];
      scale = std::max(scale, abs(b0[i]));
      for (size_t j = 0; j < ncol; ++j) {
        r -= A0[i][j] * sol[j];
        scale = std::max(scale, abs(A0[i][j] * sol[j]));
      }
      resid[i] = r;
    }
    if (scale == 0) scale = 1;
    for (size_t i = 0; i < rows; ++i) {
      xreal rel = abs(resid[i]) / scale;
      if (max_rel_residual && rel > *max_rel_residual) *max_rel_residual = rel;
      if (rel > tol) {
        std::ostringstream os;
        os << "solve_order: residual " << rel.str(3) << " at order "
           << order_index << ", x-power " << i << " exceeds 1e-20";
        if (getenv("PSLET_DEBUG_ORDER")) {
          os << "\nmatrix (rows x cols = " << rows << " x " << ncol << "):\n";
          for (size_t r = 0; r < rows; ++r) {
            for (size_t cjj = 0; cjj < ncol; ++cjj)
              os << A0[r][cjj].str(3) << " ";
            os << " | " << b0[r].str(3) << "\n";
          }
          os << "sol: ";
          for (auto& sv : sol) os << sv.str(3) << " ";
        }
        throw std::runtime_error(os.str());
      }
    }
    return sol;
  }
};

}  // namespace

namespace {

Poly upsilon_poly(const ExpansionPoint& pt, int n) {
  if (static_cast<unsigned>(n) + 2 > pt.order_max)
    throw std::logic_error("upsilon_poly: order exceeds order_max");
  const xreal two_beta_p1 = 2 * pt.beta0 + 1;
  Poly u = poly::zero(n + 2);
  u[n + 2] += pt.T[n + 2];
  if (n == 0) {
    u[0] += two_beta_p1 * pt.a[0];
  } else if (n == 1) {
    u[1] += two_beta_p1 * pt.a[1];
  } else {
    u[n] += two_beta_p1 * pt.a[n];
    u[n - 2] += pt.beta0 * (pt.beta0 + 1) * pt.a[n - 2];
  }
  return u;
}

Poly j_poly(const ExpansionPoint& pt, const std::vector<xreal>& E, int n,
            MissingEnergy policy) {
  const xreal rq = pt.r0 * pt.r0 / pt.Q;
  Poly J = poly::zero(2 * (n + 1));
  for (int p = 0; p <= n + 1; ++p)
    J[2 * p] += 2 * rq * energy_at(E, n - p, policy) * pt.c.at(2 * p);
  return J;
}

Poly k_poly(const ExpansionPoint& pt, const std::vector<xreal>& E, int n,
            MissingEnergy policy) {
  const xreal rq = pt.r0 * pt.r0 / pt.Q;
  Poly K = poly::zero(2 * n + 3);
  for (int p = 0; p <= n + 1; ++p)
    K[2 * p + 1] += 2 * rq * energy_at(E, n - p, policy) * pt.c.at(2 * p + 1);
  return K;
}

xreal eps_scalar(const ExpansionPoint& pt, const std::vector<xreal>& E, int n,
                 MissingEnergy policy) {
  xreal eps = 0;
  for (int p = -1; p <= n + 1; ++p)
    eps += energy_at(E, n - p, policy) * energy_at(E, p, policy);
  return eps * pt.r0 * pt.r0 / pt.Q;
}

}  // namespace

OrderTerms build_order_terms(const ExpansionPoint& pt,
                             const std::vector<xreal>& E_known, int n,
                             MissingEnergy policy) {
  if (n < 0) throw std::logic_error("build_order_terms: n must be >= 0");
  OrderTerms t;
  t.upsilon = upsilon_poly(pt, n);
  t.J = j_poly(pt, E_known, n, policy);
  t.K = k_poly(pt, E_known, n, policy);
  t.eps = eps_scalar(pt, E_known, n, policy);
  return t;
}

RecursionResult solve_recursion(const EffectiveProblem& prob,
                                const ExpansionPoint& pt, unsigned N) {
  RecursionResult res;
  res.point = pt;
  const int k = pt.k;
  const unsigned M_max = 2 * N;
  if (pt.order_max < M_max + 2)
    throw std::logic_error("solve_recursion: order_max too small for N");

  const xreal rq = pt.r0 * pt.r0 / pt.Q;
  const xreal two_beta_p1 = 2 * pt.beta0 + 1;

  // Effective quadratic coefficient of the well; omega = 2 sqrt(G2).
  const xreal g2 = pt.T[2] + 2 * rq * pt.E_lead * pt.c[2];
  if (g2 <= 0)
    throw std::domain_error("solve_recursion: expansion well has no curvature");
  const xreal d1 = -sqrt(g2);
  {
    xreal mismatch = abs(2 * sqrt(g2) - pt.omega);
    if (mismatch > roundoff_scale() * pt.omega)
      throw std::logic_error("solve_recursion: omega inconsistent with T2 assembly");
  }

  std::vector<xreal>& E = res.series.E_coeffs;
  E = {pt.E_lead, xreal(0)};  // E^(-1), E^(0)

  std::vector<Poly> W(M_max + 1);   // U' coefficient of delta^m
  std::vector<Poly> L(M_max + 1);   // F coefficient of delta^m (deg <= k-1)
  res.wave.A.assign(M_max + 1, std::vector<xreal>(k, xreal(0)));

  // P^(M): potential-side polynomial at delta-order M. upsilon sits at
  // index M; J^(M/2) joins at even M, K^((M-1)/2) at odd M, and the
  // energy-product term -eps^(M/2-1) at even M >= 2.
  auto p_poly = [&](int M, MissingEnergy policy) {
    Poly P = upsilon_poly(pt, M);
    if (M % 2 == 0) {
      poly::add_scaled(P, j_poly(pt, E, M / 2, policy), xreal(1));
      if (M >= 2) P[0] -= eps_scalar(pt, E, M / 2 - 1, policy);
    } else {
      poly::add_scaled(P, k_poly(pt, E, (M - 1) / 2, policy), xreal(1));
    }
    return P;
  };

  // Order 0. The top row fixes the Gaussian slope D_{1,0} = -omega/2;
  // beta0 kills the x^k row, so E^(0) = 0; remaining rows determine A^(0).
  W[0] = Poly{xreal(0), d1};
  res.wave.D[{1, 0}] = d1;
  res.wave.D[{0, 0}] = 0;

  Poly P0 = poly::zero(2);
  P0[2] = g2;
  P0[0] = two_beta_p1;
  // P0 - W0' - W0^2, the operator seen by every F-column.
  Poly P0c = P0;
  P0c[0] -= d1;
  P0c[2] -= d1 * d1;

  auto a_column = [&](int p) {
    Poly col = poly::shifted(P0c, p);
    if (p >= 1) {
      Poly t = poly::shifted(Poly{2 * p * d1}, p);
      poly::add_scaled(col, t, xreal(-1));
    }
    if (p >= 2) {
      Poly t = poly::shifted(Poly{xreal(p) * xreal(p - 1)}, p - 2);
      poly::add_scaled(col, t, xreal(-1));
    }
    return col;
  };

  if (k > 0) {
    RectSolver s;
    s.rows = k + 3;
    for (int p = 0; p < k; ++p) s.cols.push_back(a_column(p));
    s.rhs = poly::zero(k + 2);
    if (k >= 2) s.rhs[k - 2] = xreal(k) * xreal(k - 1);
    auto sol = s.solve(0, &res.max_residual);
    L[0] = Poly(sol.begin(), sol.end());
    res.wave.A[0] = sol;
  }

  Poly phi0 = poly::shifted(Poly{xreal(1)}, k);
  if (k > 0)
    for (int p = 0; p < k; ++p) phi0[p] += L[0].empty() ? xreal(0) : L[0][p];
  const Poly phi0p = poly::deriv(phi0);

  for (unsigned M = 1; M <= M_max; ++M) {
    RectSolver s;
    s.rows = k + 2 * M + 3;
    struct ColMeta {
      char kind;
      int p;
    };
    std::vector<ColMeta> meta;

    // D_{p,M}: odd part of the new U' order.
    for (int p = 1; p <= static_cast<int>(M) + 1; ++p) {
      Poly inner = poly::shifted(Poly{xreal(2 * p - 1)}, 2 * p - 2);
      poly::add_scaled(inner, poly::shifted(Poly{2 * d1}, 2 * p), xreal(1));
      Poly col = poly::mul(phi0, inner);
      poly::add_scaled(col, poly::mul(phi0p, poly::shifted(Poly{xreal(2)}, 2 * p - 1)),
                       xreal(1));
      for (auto& cc : col) cc = -cc;
      s.cols.push_back(std::move(col));
      meta.push_back({'D', p});
    }
    // C_{p,M-1}: even part.
    for (int p = 0; p <= static_cast<int>(M); ++p) {
      Poly inner = poly::shifted(Poly{2 * d1}, 2 * p + 1);
      if (p > 0) poly::add_scaled(inner, poly::shifted(Poly{xreal(2 * p)}, 2 * p - 1), xreal(1));
      Poly col = poly::mul(phi0, inner);
      poly::add_scaled(col, poly::mul(phi0p, poly::shifted(Poly{xreal(2)}, 2 * p)),
                       xreal(1));
      for (auto& cc : col) cc = -cc;
      s.cols.push_back(std::move(col));
      meta.push_back({'C', p});
    }
    // A^(M)_p.
    for (int p = 0; p < k; ++p) {
      s.cols.push_back(a_column(p));
      meta.push_back({'A', p});
    }
    // E^(M/2) at even orders, coupling through J (c0 term) and eps.
    if (M % 2 == 0) {
      Poly col = phi0;
      const xreal coupling = 2 * rq * (pt.c[0] - pt.E_lead);
      if (coupling == 0)
        throw std::runtime_error(
            "solve_recursion: degenerate energy coupling (E^(-1) = c0)");
      for (auto& cc : col) cc *= coupling;
      s.cols.push_back(std::move(col));
      meta.push_back({'E', static_cast<int>(M / 2)});
    }

    // Known part of the order-M relation.
    Poly known = poly::mul(phi0, p_poly(M, MissingEnergy::TreatAsZero));
    {
      Poly v2known;
      for (unsigned p = 1; p < M; ++p) {
        if (W[p].empty() || W[M - p].empty()) continue;
        poly::add_scaled(v2known, poly::mul(W[p], W[M - p]), xreal(1));
      }
      if (!v2known.empty())
        poly::add_scaled(known, poly::mul(phi0, v2known), xreal(-1));
    }
    for (unsigned m = 1; m < M; ++m) {
      if (L[m].empty()) continue;
      bool nonzero = false;
      for (auto& cc : L[m]) nonzero = nonzero || cc != 0;
      if (!nonzero) continue;
      Poly term = p_poly(M - m, MissingEnergy::Strict);
      poly::add_scaled(term, poly::deriv(W[M - m]), xreal(-1));
      Poly v2;
      for (unsigned p = 0; p <= M - m; ++p) {
        if (W[p].empty() || W[M - m - p].empty()) continue;
        poly::add_scaled(v2, poly::mul(W[p], W[M - m - p]), xreal(1));
      }
      if (!v2.empty()) poly::add_scaled(term, v2, xreal(-1));
      poly::add_scaled(known, poly::mul(L[m], term), xreal(1));
      poly::add_scaled(known, poly::mul(poly::deriv(L[m]), W[M - m]), xreal(-2));
    }

    s.rhs = known;
    for (auto& cc : s.rhs) cc = -cc;

    auto sol = s.solve(static_cast<int>(M), &res.max_residual);

    Poly WM = poly::zero(2 * M + 2);
    for (size_t j = 0; j < sol.size(); ++j) {
      switch (meta[j].kind) {
        case 'D':
          res.wave.D[{meta[j].p, static_cast<int>(M)}] = sol[j];
          WM[2 * meta[j].p - 1] += sol[j];
          break;
        case 'C':
          res.wave.C[{meta[j].p, static_cast<int>(M) - 1}] = sol[j];
          WM[2 * meta[j].p] += sol[j];
          break;
        case 'A':
          res.wave.A[M][meta[j].p] = sol[j];
          break;
        case 'E':
          E.push_back(sol[j]);
          break;
      }
    }
    res.wave.D[{0, static_cast<int>(M)}] = 0;
    W[M] = std::move(WM);
    if (k > 0) L[M] = Poly(res.wave.A[M].begin(), res.wave.A[M].end());
  }

  res.series.lbar = pt.lbar;
  res.series.Q = pt.Q;
  res.series.k = pt.k;
  res.series.ell = prob.quantum_ell;
  res.series.n_corrections = N;
  return res;
}

RecursionResult energy_corrections(const EffectiveProblem& prob, int k,
                                   unsigned N, const ExpansionOptions& opts) {
  if (N < 1) throw std::domain_error("energy_corrections: N must be >= 1");
  ExpansionOptions o = opts;
  o.order_max = std::max<unsigned>(o.order_max, 2 * N + 2);
  ExpansionPoint pt = solve_expansion_point(prob, k, o);
  return solve_recursion(prob, pt, N);
}

Poly f_polynomial(const RecursionResult& res, unsigned n_orders) {
  const int k = res.point.k;
  Poly f = poly::shifted(Poly{xreal(1)}, k);
  if (k == 0) return f;
  const xreal root_lbar_inv = 1 / sqrt(res.point.lbar);
  xreal fac = 1;
  for (unsigned n = 0; n <= n_orders && n < res.wave.A.size(); ++n) {
    for (int p = 0; p < k; ++p) f[p] += res.wave.A[n][p] * fac;
    fac *= root_lbar_inv;
  }
  return f;
}

int poly_sign_changes(const Poly& p, double x_lo, double x_hi, int samples) {
  int changes = 0;
  double last = 0;
  for (int i = 0; i <= samples; ++i) {
    double x = x_lo + (x_hi - x_lo) * i / samples;
    double v = 0, xp = 1;
    for (auto& c : p) {
      v += static_cast<double>(c) * xp;
      xp *= x;
    }
    if (last != 0 && v != 0 && (v > 0) != (last > 0)) ++changes;
    if (v != 0) last = v;
  }
  return changes;
}

}  // namespace pslet
