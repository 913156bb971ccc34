#include "pslet/tables.hpp"

#include <array>
#include <stdexcept>

namespace pslet {

namespace {

using Entry = ReferenceTable::Entry;
using SeriesRef = ReferenceTable::SeriesRef;

RunConfig linear_scalar_config(bool kappa_is_ell) {
  RunConfig cfg;
  cfg.equation = EquationKind::Dirac;
  cfg.mass = xreal("1.12");
  cfg.scalar_part = PowerSum::monomial(xreal("0.137"), Rational(1));
  cfg.order = 14;
  cfg.report_mass = true;
  if (kappa_is_ell) {
    for (int k : {0, 1})
      for (int l : {1, 2, 3, 4}) cfg.states.push_back({k, l, l});
  } else {
    for (int k : {0, 2})
      for (int l : {0, 1, 2, 3}) cfg.states.push_back({k, l, -(l + 1)});
  }
  return cfg;
}

RunConfig funnel_dirac_config(bool kappa_is_ell) {
  RunConfig cfg;
  cfg.equation = EquationKind::Dirac;
  cfg.mass = xreal("1.358");
  // V = -2 alpha / (3 r), S = b r / 2
  cfg.vector_part =
      PowerSum::monomial(xreal(-2) * xreal("0.39") / 3, Rational(-1));
  cfg.scalar_part = PowerSum::monomial(xreal("0.21055") / 2, Rational(1));
  cfg.order = 14;
  cfg.report_mass = true;
  if (kappa_is_ell) {
    for (auto [k, l] : std::array<std::pair<int, int>, 6>{
             {{0, 1}, {0, 2}, {1, 1}, {1, 3}, {2, 1}, {2, 3}}})
      cfg.states.push_back({k, l, l});
  } else {
    for (auto [k, l] : std::array<std::pair<int, int>, 10>{{{0, 0},
                                                            {0, 1},
                                                            {0, 2},
                                                            {0, 3},
                                                            {0, 4},
                                                            {1, 0},
                                                            {1, 1},
                                                            {1, 2},
                                                            {2, 0},
                                                            {2, 1}}})
      cfg.states.push_back({k, l, -(l + 1)});
  }
  return cfg;
}

std::vector<SeriesRef> refs(std::initializer_list<std::pair<int, double>> vals,
                            std::initializer_list<int> checked_N = {},
                            double tol = 5e-4) {
  std::vector<SeriesRef> out;
  auto is_checked = [&](int N) {
    for (int c : checked_N)
      if (c == N) return true;
    return false;
  };
  for (auto& [N, v] : vals) out.push_back({N, v, is_checked(N), tol});
  return out;
}

ReferenceTable make_table(int id) {
  ReferenceTable table;
  auto* t = &table;
  t->id = id;
  switch (id) {
    case 1: {
      t->kind = ReferenceTable::Kind::MassSeries;
      t->title = "Dirac J/psi masses, scalar linear confinement, kappa = -(l+1)";
      t->config = linear_scalar_config(false);
      t->entries = {
          {0, 0,
           refs({{1, 3.0919}, {2, 3.0961}, {3, 3.0963}, {4, 3.0961}, {5, 3.0961}, {14, 3.0961}},
                {1, 2, 14}),
           3.103},
          // the printed M(4) = 4.43256 is a known misprint; shown, never checked
          {0, 1,
           refs({{1, 3.43078}, {2, 3.43252}, {3, 3.43259}, {4, 4.43256}, {5, 3.43256}, {14, 3.43256}},
                {1, 2, 14}),
           3.442},
          {0, 2,
           refs({{1, 3.711960}, {2, 3.712914}, {3, 3.712947}, {4, 3.712940}, {5, 3.712939}, {14, 3.712939}},
                {1, 2, 14}),
           3.725},
          {0, 3,
           refs({{1, 3.9581219}, {2, 3.9587277}, {3, 3.9587465}, {4, 3.9587436}, {5, 3.9587434}, {14, 3.9587434}},
                {1, 2, 14}),
           3.973},
          {2, 0,
           refs({{1, 4.131}, {2, 4.142}, {3, 4.148}, {4, 4.150}, {5, 4.151}, {6, 4.152}, {7, 4.152}, {14, 4.152}},
                {1, 2, 14}),
           4.158},
          {2, 1,
           refs({{1, 4.3395}, {2, 4.3468}, {3, 4.3502}, {4, 4.3515}, {5, 4.3519}, {6, 4.3520}, {7, 4.3521}, {14, 4.3521}},
                {1, 2, 14}),
           4.36},
          {2, 2,
           refs({{1, 4.5325}, {2, 4.5378}, {3, 4.5401}, {4, 4.5408}, {5, 4.5410}, {6, 4.5411}, {7, 4.5411}, {14, 4.5411}},
                {1, 2, 14}),
           4.551},
          {2, 3,
           refs({{1, 4.71334}, {2, 4.71739}, {3, 4.71905}, {4, 4.71950}, {5, 4.71961}, {6, 4.71965}, {7, 4.71966}, {14, 4.71966}},
                {1, 2, 14}),
           4.732},
      };
      break;
    }
    case 2: {
      t->kind = ReferenceTable::Kind::MassSeries;
      t->title = "Dirac J/psi masses, scalar linear confinement, kappa = l";
      t->config = linear_scalar_config(true);
      t->entries = {
          {0, 1,
           refs({{1, 3.47090}, {2, 3.47183}, {3, 3.47188}, {4, 3.47186}, {5, 3.47186}, {14, 3.47186}}, {14}),
           3.47},
          {0, 2,
           refs({{1, 3.760125}, {2, 3.760677}, {3, 3.760700}, {4, 3.760696}, {5, 3.760695}, {14, 3.760695}}, {14}),
           3.757},
          {0, 3,
           refs({{1, 4.0111817}, {2, 4.0115488}, {3, 4.0115615}, {4, 4.0115597}, {5, 4.0115595}, {14, 4.0115595}}, {14}),
           4.006},
          {0, 4,
           refs({{1, 4.2364739}, {2, 4.2367365}, {3, 4.2367444}, {4, 4.2367435}, {5, 4.2367435}, {14, 4.2367435}}, {14}),
           4.23},
          {1, 1,
           refs({{1, 3.9570}, {2, 3.9624}, {3, 3.9640}, {4, 3.9644}, {5, 3.9646}, {6, 3.9646}, {14, 3.9646}}, {14}),
           3.965},
          {1, 2,
           refs({{1, 4.19083}, {2, 4.19451}, {3, 4.19537}, {4, 4.19557}, {5, 4.19561}, {6, 4.19563}, {14, 4.19563}}, {14}),
           4.194},
          {1, 3,
           refs({{1, 4.40310}, {2, 4.40578}, {3, 4.40631}, {4, 4.40642}, {5, 4.40644}, {6, 4.40644}, {14, 4.40644}}, {14}),
           4.403},
          {1, 4,
           refs({{1, 4.599080}, {2, 4.601126}, {3, 4.601482}, {4, 4.601542}, {5, 4.601552}, {6, 4.601554}, {14, 4.601554}}, {14}),
           4.597},
      };
      break;
    }
    case 3: {
      t->kind = ReferenceTable::Kind::MassSeries;
      t->title = "Dirac charmonium masses, funnel potential, kappa = l";
      t->config = funnel_dirac_config(true);
      auto e = [&](int k, int l, std::initializer_list<std::pair<int, double>> v,
                   double hbar, double num) {
        Entry en{k, l, refs(v, {14}), num};
        en.hbar_ref = hbar;
        return en;
      };
      t->entries = {
          e(0, 1, {{1, 3.5071}, {2, 3.5062}, {3, 3.5056}, {4, 3.5055}, {5, 3.5055}, {6, 3.5055}, {7, 3.5055}, {8, 3.5055}, {14, 3.5055}}, 3.4998, 3.4998),
          e(0, 2, {{1, 3.8012}, {2, 3.8007}, {3, 3.8006}, {4, 3.8005}, {5, 3.8005}, {6, 3.8005}, {7, 3.8005}, {8, 3.8005}, {14, 3.8005}}, 3.7974, 3.7974),
          e(1, 1, {{1, 3.966}, {2, 3.963}, {3, 3.961}, {4, 3.959}, {5, 3.959}, {6, 3.958}, {7, 3.958}, {8, 3.958}, {14, 3.958}}, 3.9501, 3.9499),
          e(1, 3, {{1, 4.3862}, {2, 4.3857}, {3, 4.3853}, {4, 4.3852}, {5, 4.3851}, {6, 4.3851}, {7, 4.3850}, {8, 4.3850}, {14, 4.3850}}, 4.3812, 4.3812),
          e(2, 1, {{1, 4.333}, {2, 4.331}, {3, 4.329}, {4, 4.327}, {5, 4.326}, {6, 4.325}, {7, 4.325}, {8, 4.324}, {14, 4.324}}, 4.316, 4.315),
          e(2, 3, {{1, 4.6906}, {2, 4.6908}, {3, 4.6905}, {4, 4.6901}, {5, 4.6899}, {6, 4.6898}, {7, 4.6897}, {8, 4.6897}, {14, 4.6897}}, 4.6858, 4.6858),
      };
      break;
    }
    case 4: {
      t->kind = ReferenceTable::Kind::MassPade;
      t->title = "Dirac charmonium masses, funnel potential, kappa = -(l+1), Pade stabilized";
      t->config = funnel_dirac_config(false);
      auto e = [&](int k, int l, int N, double MN, int pi, int pj, double pv,
                   bool pade_checked) {
        Entry en{k, l, {{N, MN, false}}};
        en.pade_ij = {pi, pj};
        en.pade_ref = pv;
        en.pade_checked = pade_checked;
        return en;
      };
      t->entries = {
          e(0, 0, 6, 3.0333, 4, 4, 3.0333, true),
          e(0, 1, 5, 3.4918, 2, 3, 3.4918, true),
          e(0, 2, 4, 3.7787, 2, 3, 3.7787, false),
          e(0, 3, 4, 4.0129, 2, 3, 4.0129, false),
          e(0, 4, 4, 4.2177, 2, 3, 4.2177, false),
          e(1, 0, 7, 3.65, 5, 5, 3.6502, true),
          e(1, 1, 7, 3.946, 4, 4, 3.9462, false),
          e(1, 2, 7, 4.1690, 4, 4, 4.1690, false),
          e(2, 0, 9, 4.08, 6, 6, 4.0789, true),
          e(2, 1, 9, 4.314, 4, 5, 4.3139, false),
      };
      t->config.pade_requests = {{4, 4}, {2, 3}, {5, 5}, {4, 5}, {6, 6}};
      break;
    }
    case 5: {
      t->kind = ReferenceTable::Kind::EnergySeries;
      t->title = "Klein-Gordon energies, funnel potential";
      RunConfig cfg;
      cfg.equation = EquationKind::KleinGordon;
      cfg.mass = xreal("1.370");
      cfg.vector_part = PowerSum::monomial(xreal("-0.26"), Rational(-1));
      cfg.scalar_part = PowerSum::monomial(xreal("0.10429"), Rational(1));
      cfg.order = 14;
      for (int l : {0, 1, 2}) cfg.states.push_back({0, l, std::nullopt});
      t->config = cfg;
      auto e = [&](int l, std::initializer_list<std::pair<int, double>> v,
                   double hbar, double num, double tol) {
        Entry en{0, l, refs(v, {1, 2, 3, 4, 14}, tol), num};
        en.hbar_ref = hbar;
        return en;
      };
      t->entries = {
          e(0, {{1, 1.541}, {2, 1.535}, {3, 1.534}, {4, 1.533}, {14, 1.533}}, 1.536, 1.533, 5e-4),
          e(1, {{1, 1.76167}, {2, 1.76064}, {3, 1.76037}, {4, 1.76033}, {14, 1.76033}}, 1.7604, 1.760, 5e-5),
          e(2, {{1, 1.90420}, {2, 1.90388}, {3, 1.90380}, {4, 1.90379}, {14, 1.90379}}, 1.9038, 1.904, 5e-5),
      };
      break;
    }
    case 6: {
      t->kind = ReferenceTable::Kind::EhatStabilized;
      t->title = "Reduced power-law eigenvalues (Martin potential, nu = 0.1)";
      RunConfig cfg;
      cfg.equation = EquationKind::Dirac;
      cfg.mass = 1;
      cfg.order = 14;
      for (auto [k, l] : std::array<std::pair<int, int>, 6>{
               {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}})
        cfg.states.push_back({k, l, -(l + 1)});
      t->config = cfg;
      t->powerlaw_nu = Rational(1, 10);
      auto e = [&](int k, int l, int N, double v, double num, double non) {
        Entry en{k, l, {{N, v, true}}, num};
        en.one_over_n_ref = non;
        return en;
      };
      t->entries = {
          e(0, 0, 2, 1.2358, 1.2364, 1.240),
          e(1, 0, 7, 1.3347, 1.3347, 1.340),
          e(2, 0, 4, 1.3922, 1.3923, 1.398),
          e(0, 1, 1, 1.3072, 1.3071, 1.309),
          e(1, 1, 4, 1.3731, 1.3731, 1.411),
          e(0, 2, 1, 1.3540, 1.3544, 1.358),
      };
      break;
    }
    default:
      throw std::out_of_range("reference_table: id must be in 1..6");
  }
  return table;
}

}  // namespace

ReferenceTable reference_table(int id) {
  if (id < 1 || id > 6) throw std::out_of_range("reference_table: id must be in 1..6");
  return make_table(id);
}

}  // namespace pslet
