#include "pslet/app.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pslet/exact.hpp"
#include "pslet/powerlaw.hpp"
#include "pslet/recursion.hpp"

namespace pslet::app {

namespace {

std::string fmt(const xreal& v, unsigned digits = 10) {
  return v.str(digits, std::ios_base::fmtflags(0));
}

std::string state_id(int k, int ell, int kappa) {
  std::ostringstream os;
  os << k << "/" << ell << "/" << kappa;
  return os.str();
}

// Single monomial c r^p, or nothing.
std::optional<std::pair<xreal, Rational>> sole_term(const PowerSum& p) {
  if (p.size() != 1) return std::nullopt;
  return std::make_pair(p.terms()[0].coeff, p.terms()[0].power);
}

void solve_one_state(const RunConfig& cfg, const StateSelector& sel,
                     bool with_oracle, bool with_exact, StateReport& rep) {
  rep.sel = sel;
  try {
    PotentialSpec spec = cfg.spec_for(sel);
    rep.kappa = spec.kappa;
    EffectiveProblem prob = build_effective(spec, sel.ell);
    ExpansionOptions opts;
    opts.branch = cfg.branch;
    RecursionResult res = energy_corrections(prob, sel.k, cfg.order, opts);
    res.series.kappa = spec.kappa;
    rep.r0 = res.point.r0;
    rep.lbar = res.point.lbar;
    rep.omega = res.point.omega;
    rep.E_lead = res.point.E_lead;
    rep.warnings = res.point.warnings;
    for (unsigned N = 1; N <= cfg.order; ++N)
      rep.partials.push_back(partial_sum(res.series, N));
    for (auto& [i, j] : cfg.pade_requests) {
      PadeEntry pe = pade(res.series, i, j);
      rep.pades.push_back({i, j, pe.value, pe.pole_on_disc});
    }
    if (auto st = stabilize_sequence(rep.partials, xreal(kDefaultStabilizationTol)))
      rep.stab = {st->N_star, st->value};
    if (with_oracle) rep.oracle = shoot_eigenvalue(prob, sel.k, cfg.oracle);
    if (with_exact) rep.exact = closed_form_value(cfg, sel);
    rep.ok = true;
  } catch (const std::exception& e) {
    rep.ok = false;
    std::ostringstream os;
    os << "state (k=" << sel.k << ", l=" << sel.ell << "): " << e.what();
    rep.error = os.str();
  }
}

struct OutputOptions {
  std::string format = "text";
  bool mass = false;
  bool meta = false;
  unsigned jobs = 1;
};

std::string value_label(bool mass, unsigned N) {
  std::ostringstream os;
  os << (mass ? "M(" : "E(") << N << ")";
  return os.str();
}

void print_states_text(std::ostream& out,
                       const std::vector<StateReport>& reports, bool mass) {
  for (const auto& r : reports) {
    out << "state k=" << r.sel.k << " l=" << r.sel.ell << " kappa=" << r.kappa
        << "\n";
    if (!r.ok) {
      out << "  error: " << r.error << "\n";
      continue;
    }
    out << "  r0=" << fmt(r.r0) << " lbar=" << fmt(r.lbar)
        << " omega=" << fmt(r.omega) << "\n";
    const xreal scale = mass ? xreal(2) : xreal(1);
    out << "  leading " << (mass ? "M" : "E") << " = " << fmt(scale * r.E_lead)
        << "\n";
    for (unsigned N = 1; N <= r.partials.size(); ++N)
      out << "  " << value_label(mass, N) << " = "
          << fmt(scale * r.partials[N - 1]) << "\n";
    for (const auto& p : r.pades)
      out << "  " << (mass ? "M[" : "E[") << p.i << "," << p.j
          << "] = " << fmt(scale * p.value) << (p.pole_on_disc ? "  (pole on disc)" : "")
          << "\n";
    if (r.stab)
      out << "  stabilized at N=" << r.stab->first << ": "
          << fmt(scale * r.stab->second) << "\n";
    if (r.oracle) {
      double gap = std::fabs(static_cast<double>(r.partials.back()) - r.oracle->E_num);
      out << "  oracle = " << fmt(scale * xreal(r.oracle->E_num), 12)
          << " (nodes=" << r.oracle->nodes
          << ", matched=" << (r.oracle->matched ? "yes" : "no")
          << ", mesh_delta=" << r.oracle->mesh_halving_delta
          << ", gap=" << (mass ? 2 * gap : gap) << ")\n";
    }
    if (r.exact) out << "  exact = " << fmt(scale * *r.exact, 20) << "\n";
    for (auto& w : r.warnings) out << "  warning: " << w << "\n";
  }
}

void print_states_csv(std::ostream& out, const std::vector<StateReport>& reports,
                      bool mass) {
  out << "state,order,value,method\n";
  const char* kind = mass ? "mass" : "energy";
  for (const auto& r : reports) {
    std::string id = state_id(r.sel.k, r.sel.ell, r.kappa);
    if (!r.ok) {
      out << id << ",,," << "error:" << r.error << "\n";
      continue;
    }
    const xreal scale = mass ? xreal(2) : xreal(1);
    for (unsigned N = 1; N <= r.partials.size(); ++N)
      out << id << "," << N << "," << fmt(scale * r.partials[N - 1], 30) << ","
          << kind << "\n";
    for (const auto& p : r.pades)
      out << id << "," << p.i + p.j << "," << fmt(scale * p.value, 30)
          << ",pade[" << p.i << "." << p.j << "]\n";
    if (r.stab)
      out << id << "," << r.stab->first << "," << fmt(scale * r.stab->second, 30)
          << ",stabilized\n";
    if (r.oracle)
      out << id << ",," << fmt(scale * xreal(r.oracle->E_num), 17) << ",oracle\n";
    if (r.exact) out << id << ",," << fmt(scale * *r.exact, 30) << ",exact\n";
  }
}

nlohmann::json states_json(const std::vector<StateReport>& reports, bool mass) {
  nlohmann::json arr = nlohmann::json::array();
  const xreal scale = mass ? xreal(2) : xreal(1);
  for (const auto& r : reports) {
    nlohmann::json s;
    s["k"] = r.sel.k;
    s["ell"] = r.sel.ell;
    s["kappa"] = r.kappa;
    s["ok"] = r.ok;
    if (!r.ok) {
      s["error"] = r.error;
      arr.push_back(s);
      continue;
    }
    s["r0"] = fmt(r.r0, 30);
    s["lbar"] = fmt(r.lbar, 30);
    s["omega"] = fmt(r.omega, 30);
    s["leading"] = fmt(scale * r.E_lead, 30);
    nlohmann::json series = nlohmann::json::array();
    for (auto& v : r.partials) series.push_back(fmt(scale * v, 30));
    s["partial_sums"] = series;
    if (!r.pades.empty()) {
      nlohmann::json pj = nlohmann::json::array();
      for (auto& p : r.pades)
        pj.push_back({{"i", p.i},
                      {"j", p.j},
                      {"value", fmt(scale * p.value, 30)},
                      {"pole_on_disc", p.pole_on_disc}});
      s["pade"] = pj;
    }
    if (r.stab)
      s["stabilized"] = {{"N", r.stab->first},
                         {"value", fmt(scale * r.stab->second, 30)}};
    if (r.oracle)
      s["oracle"] = {{"value", scale == 2 ? 2 * r.oracle->E_num : r.oracle->E_num},
                     {"nodes", r.oracle->nodes},
                     {"matched", r.oracle->matched},
                     {"mesh_halving_delta", r.oracle->mesh_halving_delta}};
    if (r.exact) s["exact"] = fmt(scale * *r.exact, 30);
    if (!r.warnings.empty()) s["warnings"] = r.warnings;
    arr.push_back(s);
  }
  return arr;
}

}  // namespace

std::optional<xreal> closed_form_value(const RunConfig& cfg,
                                       const StateSelector& s) {
  auto v = sole_term(cfg.vector_part);
  auto sc = sole_term(cfg.scalar_part);
  const bool v_coul = v && v->second == Rational(-1) && v->first < 0;
  const bool s_coul = sc && sc->second == Rational(-1) && sc->first < 0;
  if (v_coul && s_coul && v->first == sc->first)
    return exact::mixed_coulomb(cfg.mass, -v->first, s.k, s.ell);
  if (cfg.equation == EquationKind::KleinGordon) {
    if (v_coul && cfg.scalar_part.empty())
      return exact::kg_coulomb(exact::CoulombKind::Vector, cfg.mass, -v->first,
                               s.k, s.ell);
    if (s_coul && cfg.vector_part.empty())
      return exact::kg_coulomb(exact::CoulombKind::Scalar, cfg.mass, -sc->first,
                               s.k, s.ell);
  }
  if (cfg.vector_part.empty() && cfg.scalar_part.empty())
    return cfg.mass;
  return std::nullopt;
}

std::vector<StateReport> run_config_states(const RunConfig& cfg, unsigned jobs,
                                           bool with_oracle, bool with_exact) {
  std::vector<StateReport> reports(cfg.states.size());
  const unsigned precision = cfg.precision_digits;
  if (jobs <= 1) {
    set_working_precision(precision);
    for (size_t i = 0; i < cfg.states.size(); ++i)
      solve_one_state(cfg, cfg.states[i], with_oracle, with_exact, reports[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      set_working_precision(precision);
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= cfg.states.size()) break;
        solve_one_state(cfg, cfg.states[i], with_oracle, with_exact, reports[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<size_t>(jobs, cfg.states.size()); ++t)
      pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const StateReport& a, const StateReport& b) {
                     if (a.sel.k != b.sel.k) return a.sel.k < b.sel.k;
                     if (a.sel.ell != b.sel.ell) return a.sel.ell < b.sel.ell;
                     return a.kappa < b.kappa;
                   });
  return reports;
}

TableReport compute_table_report(int id, unsigned jobs,
                                 unsigned precision_override) {
  if (precision_override) set_working_precision(precision_override);
  ReferenceTable table = reference_table(id);
  if (precision_override) table.config.precision_digits = precision_override;
  TableReport rep;
  rep.id = id;
  rep.title = table.title;

  if (table.kind == ReferenceTable::Kind::EhatStabilized) {
    // Reduced power-law problem per state; Ehat(N) = eps(N)^2.
    set_working_precision(table.config.precision_digits);
    for (const auto& entry : table.entries) {
      PowerLawCase plc;
      plc.nu = *table.powerlaw_nu;
      plc.k = entry.k;
      plc.ell = entry.ell;
      RecursionResult res = reduced_eigenvalue(plc, table.config.order);
      std::vector<xreal> ehat;
      for (unsigned N = 1; N <= table.config.order + 1; ++N)
        ehat.push_back(ehat_partial(res.series, N));
      auto st = stabilize_sequence(ehat, xreal(kDefaultStabilizationTol));
      TableValue tv;
      tv.k = entry.k;
      tv.ell = entry.ell;
      if (st) {
        tv.label = "Ehat(" + std::to_string(st->N_star) + ")";
        tv.computed = st->value;
      } else {
        tv.label = "Ehat(" + std::to_string(table.config.order) + ") [no stabilization]";
        tv.computed = ehat[table.config.order - 1];
      }
      const auto& ref = entry.series.front();
      tv.reference = ref.value;
      tv.checked = ref.checked;
      tv.tol = ref.tol;
      tv.pass = std::fabs(static_cast<double>(tv.computed) - ref.value) <= ref.tol;
      if (!tv.pass && tv.checked) ++rep.check_failures;
      std::ostringstream note;
      note << "reference stabilized at N=" << ref.N;
      if (entry.numeric_ref) note << ", numeric " << *entry.numeric_ref;
      if (entry.one_over_n_ref) note << ", 1/N-expansion " << *entry.one_over_n_ref;
      tv.note = note.str();
      rep.values.push_back(tv);
    }
    return rep;
  }

  const bool mass = table.kind == ReferenceTable::Kind::MassSeries ||
                    table.kind == ReferenceTable::Kind::MassPade;
  auto reports = run_config_states(table.config, jobs, false, false);
  auto find_report = [&](int k, int ell) -> const StateReport* {
    for (auto& r : reports)
      if (r.sel.k == k && r.sel.ell == ell) return &r;
    return nullptr;
  };

  for (const auto& entry : table.entries) {
    const StateReport* sr = find_report(entry.k, entry.ell);
    if (!sr || !sr->ok) {
      rep.notes.push_back("state (" + std::to_string(entry.k) + "," +
                          std::to_string(entry.ell) + ") failed: " +
                          (sr ? sr->error : "missing"));
      ++rep.check_failures;
      continue;
    }
    const xreal scale = mass ? xreal(2) : xreal(1);
    for (const auto& ref : entry.series) {
      TableValue tv;
      tv.k = entry.k;
      tv.ell = entry.ell;
      tv.label = value_label(mass, ref.N);
      tv.computed = scale * sr->partials.at(ref.N - 1);
      tv.reference = ref.value;
      tv.checked = ref.checked;
      tv.tol = ref.tol;
      tv.pass = std::fabs(static_cast<double>(tv.computed) - ref.value) <= ref.tol;
      if (!tv.pass && tv.checked) ++rep.check_failures;
      rep.values.push_back(tv);
    }
    if (entry.numeric_ref && table.kind != ReferenceTable::Kind::MassPade) {
      TableValue tv;
      tv.k = entry.k;
      tv.ell = entry.ell;
      tv.label = mass ? "M(num ref)" : "E(num ref)";
      tv.computed = scale * sr->partials.back();
      tv.reference = *entry.numeric_ref;
      tv.checked = false;
      tv.tol = 6e-3;
      tv.pass = std::fabs(static_cast<double>(tv.computed) - *entry.numeric_ref) <= tv.tol;
      tv.note = "converged value vs reference numeric integration";
      rep.values.push_back(tv);
    }
    if (entry.pade_ij) {
      TableValue tv;
      tv.k = entry.k;
      tv.ell = entry.ell;
      auto [pi, pj] = *entry.pade_ij;
      tv.label = "M[" + std::to_string(pi) + "," + std::to_string(pj) + "]";
      const StateReport::PadeValue* found = nullptr;
      for (auto& p : sr->pades)
        if (p.i == static_cast<unsigned>(pi) && p.j == static_cast<unsigned>(pj))
          found = &p;
      if (!found) {
        rep.notes.push_back("pade " + tv.label + " missing from run");
        continue;
      }
      tv.computed = scale * found->value;
      tv.reference = entry.pade_ref;
      tv.checked = entry.pade_checked;
      tv.tol = 5e-4;
      tv.pass = std::fabs(static_cast<double>(tv.computed) - *entry.pade_ref) <= tv.tol;
      if (found->pole_on_disc) tv.note = "pole on evaluation disc";
      if (!tv.pass && tv.checked) ++rep.check_failures;
      rep.values.push_back(tv);
    }
  }
  return rep;
}

namespace {

void print_table_text(std::ostream& out, const TableReport& rep) {
  out << "table " << rep.id << ": " << rep.title << "\n";
  out << std::left << std::setw(8) << "state" << std::setw(14) << "quantity"
      << std::setw(16) << "computed" << std::setw(12) << "reference"
      << std::setw(12) << "|diff|" << "flags\n";
  for (const auto& v : rep.values) {
    std::ostringstream st;
    st << "(" << v.k << "," << v.ell << ")";
    out << std::left << std::setw(8) << st.str() << std::setw(14) << v.label
        << std::setw(16) << fmt(v.computed, 8);
    if (v.reference) {
      std::ostringstream rv, dv;
      rv << *v.reference;
      dv << std::scientific << std::setprecision(1)
         << std::fabs(static_cast<double>(v.computed) - *v.reference);
      out << std::setw(12) << rv.str() << std::setw(12) << dv.str();
    } else {
      out << std::setw(12) << "-" << std::setw(12) << "-";
    }
    if (v.checked) out << (v.pass ? "ok" : "MISMATCH");
    if (!v.note.empty()) out << "  # " << v.note;
    out << "\n";
  }
  for (auto& n : rep.notes) out << "note: " << n << "\n";
}

void print_table_csv(std::ostream& out, const TableReport& rep) {
  out << "state,order,value,method\n";
  for (const auto& v : rep.values) {
    std::string id = std::to_string(v.k) + "/" + std::to_string(v.ell);
    out << id << "," << v.label << "," << fmt(v.computed, 30) << ",computed\n";
    if (v.reference) {
      std::ostringstream rv;
      rv << *v.reference;
      out << id << "," << v.label << "," << rv.str() << ",reference\n";
    }
  }
}

void print_table_json(std::ostream& out, const TableReport& rep) {
  nlohmann::json j;
  j["table"] = rep.id;
  j["title"] = rep.title;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : rep.values) {
    nlohmann::json e;
    e["k"] = v.k;
    e["ell"] = v.ell;
    e["quantity"] = v.label;
    e["computed"] = fmt(v.computed, 30);
    if (v.reference) e["reference"] = *v.reference;
    e["checked"] = v.checked;
    if (v.checked) e["pass"] = v.pass;
    if (!v.note.empty()) e["note"] = v.note;
    arr.push_back(e);
  }
  j["values"] = arr;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App cli{"Relativistic bound-state energies via the shifted-l expansion"};
  cli.require_subcommand(1);

  std::string config_path;
  OutputOptions oo;
  bool check = false;
  bool with_oracle = false;
  unsigned precision_override = 0;
  unsigned order_override = 0;
  std::vector<std::string> pade_override;
  int table_id = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", oo.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--jobs", oo.jobs, "parallel states");
    sub->add_flag("--check", check, "nonzero exit on reference mismatch");
    sub->add_flag("--meta", oo.meta, "append run metadata");
    sub->add_option("--precision", precision_override, "working decimal digits");
  };

  CLI::App* solve = cli.add_subcommand("solve", "solve states from a config");
  solve->add_option("--config", config_path, "JSON config")->required();
  solve->add_option("--order", order_override, "corrections N");
  solve->add_option("--pade", pade_override, "extra Pade request i,j");
  solve->add_flag("--oracle", with_oracle, "include shooting-oracle column");
  add_common(solve);

  CLI::App* table = cli.add_subcommand("table", "reproduce a built-in reference table");
  table->add_option("table_id,--table", table_id, "table number 1..6")->required();
  add_common(table);

  CLI::App* compare = cli.add_subcommand("compare", "expansion vs oracle vs closed form");
  compare->add_option("--config", config_path, "JSON config")->required();
  compare->add_option("--order", order_override, "corrections N");
  add_common(compare);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    cli.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << cli.help();
      return kExitOk;
    }
    err << "argument error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (table->parsed()) {
      if (table_id < 1 || table_id > 6) {
        err << "table_id must be 1..6\n";
        return kExitValidation;
      }
      TableReport rep = compute_table_report(table_id, std::max(1u, oo.jobs),
                                             precision_override);
      if (oo.format == "csv")
        print_table_csv(out, rep);
      else if (oo.format == "json")
        print_table_json(out, rep);
      else
        print_table_text(out, rep);
      if (oo.meta)
        out << "# meta precision=" << working_precision() << " jobs=" << oo.jobs
            << "\n";
      if (check && rep.check_failures > 0) {
        err << rep.check_failures << " checked values outside tolerance\n";
        return kExitCheck;
      }
      return kExitOk;
    }

    RunConfig cfg = load_config(config_path);
    if (precision_override) {
      if (precision_override < kMinPrecisionDigits)
        throw std::invalid_argument("--precision must be >= 30");
      cfg.precision_digits = precision_override;
      set_working_precision(precision_override);
    }
    if (order_override) cfg.order = order_override;
    for (auto& p : pade_override) {
      auto comma = p.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--pade expects i,j");
      cfg.pade_requests.emplace_back(std::stoul(p.substr(0, comma)),
                                     std::stoul(p.substr(comma + 1)));
    }
    const bool is_compare = compare->parsed();
    auto reports = run_config_states(cfg, std::max(1u, oo.jobs),
                                     is_compare || with_oracle, is_compare);

    if (oo.format == "csv")
      print_states_csv(out, reports, cfg.report_mass);
    else if (oo.format == "json") {
      nlohmann::json j;
      j["states"] = states_json(reports, cfg.report_mass);
      if (oo.meta)
        j["meta"] = {{"precision", cfg.precision_digits}, {"jobs", oo.jobs}};
      out << j.dump(2) << "\n";
    } else {
      print_states_text(out, reports, cfg.report_mass);
      if (oo.meta)
        out << "# meta precision=" << cfg.precision_digits << " jobs=" << oo.jobs
            << "\n";
    }

    int exit_code = kExitOk;
    for (auto& r : reports)
      if (!r.ok) {
        err << r.error << "\n";
        exit_code = kExitSolver;
      }
    if (exit_code == kExitOk && check && is_compare) {
      for (auto& r : reports) {
        if (!r.ok || !r.oracle) continue;
        double pslet = static_cast<double>(r.partials.back());
        double scale = std::max(std::fabs(pslet), static_cast<double>(cfg.mass));
        if (scale == 0) scale = 1;
        if (std::fabs(pslet - r.oracle->E_num) > cfg.check_tol * scale) {
          err << "check: state " << state_id(r.sel.k, r.sel.ell, r.kappa)
              << " expansion/oracle gap " << std::fabs(pslet - r.oracle->E_num)
              << " exceeds tolerance\n";
          exit_code = kExitCheck;
        }
      }
    }
    return exit_code;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace pslet::app
