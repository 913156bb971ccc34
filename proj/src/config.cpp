#include "pslet/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pslet {

namespace {

using nlohmann::json;

xreal number_field(const json& j, const std::string& where) {
  if (j.is_string()) return xreal(j.get<std::string>());
  if (j.is_number_integer()) return xreal(j.get<long long>());
  if (j.is_number()) return xreal(j.get<double>());
  throw std::invalid_argument(where + ": expected number or decimal string");
}

Rational power_field(const json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    std::ostringstream os;
    os.precision(15);
    os << j.get<double>();
    return Rational::parse(os.str());
  }
  throw std::invalid_argument(where + ": expected rational power");
}

PowerSum parse_terms(const json& arr, const std::string& where) {
  if (arr.is_null()) return PowerSum();
  if (!arr.is_array()) throw std::invalid_argument(where + ": expected array");
  std::vector<PowerSum::Term> terms;
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& t = arr[i];
    std::string ctx = where + "[" + std::to_string(i) + "]";
    if (!t.contains("coeff") || !t.contains("power"))
      throw std::invalid_argument(ctx + ": term needs coeff and power");
    terms.push_back({number_field(t["coeff"], ctx + ".coeff"),
                     power_field(t["power"], ctx + ".power")});
  }
  return PowerSum(std::move(terms));
}

}  // namespace

PotentialSpec RunConfig::spec_for(const StateSelector& s) const {
  PotentialSpec spec;
  spec.vector_part = vector_part;
  spec.scalar_part = scalar_part;
  spec.mass = mass;
  spec.equation_kind = equation;
  if (equation == EquationKind::Dirac) {
    spec.kappa = s.kappa_or_default();
    if (spec.kappa == 0)
      throw std::invalid_argument("kappa must be nonzero for Dirac states");
    if (spec.ell() != s.ell)
      throw std::invalid_argument("state kappa inconsistent with ell");
  } else {
    // Klein-Gordon: kappa only fixes l(l+1); normalize to ell.
    spec.kappa = s.kappa ? *s.kappa : -(s.ell + 1);
    if (spec.kappa == 0)
      throw std::invalid_argument("kappa must be nonzero");
    if (spec.ell() != s.ell)
      throw std::invalid_argument("state kappa inconsistent with ell");
  }
  return spec;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }

  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw std::invalid_argument("config: missing or unsupported \"schema\" (want 1)");

  RunConfig cfg;
  std::string eq = j.value("equation", "dirac");
  if (eq == "dirac")
    cfg.equation = EquationKind::Dirac;
  else if (eq == "kg")
    cfg.equation = EquationKind::KleinGordon;
  else
    throw std::invalid_argument("config.equation: expected \"dirac\" or \"kg\"");

  cfg.precision_digits = j.value("precision_digits", kDefaultPrecisionDigits);
  if (cfg.precision_digits < kMinPrecisionDigits)
    throw std::invalid_argument("config.precision_digits must be >= 30");
  set_working_precision(cfg.precision_digits);

  if (!j.contains("mass")) throw std::invalid_argument("config.mass is required");
  cfg.mass = number_field(j["mass"], "config.mass");
  if (cfg.mass < 0) throw std::invalid_argument("config.mass must be >= 0");

  if (j.contains("potential")) {
    cfg.vector_part = parse_terms(j["potential"].value("vector", json()),
                                  "config.potential.vector");
    cfg.scalar_part = parse_terms(j["potential"].value("scalar", json()),
                                  "config.potential.scalar");
  }

  if (!j.contains("states") || !j["states"].is_array() || j["states"].empty())
    throw std::invalid_argument("config.states must be a non-empty array");
  for (size_t i = 0; i < j["states"].size(); ++i) {
    const json& s = j["states"][i];
    std::string ctx = "config.states[" + std::to_string(i) + "]";
    StateSelector sel;
    sel.k = s.value("k", 0);
    if (sel.k < 0) throw std::invalid_argument(ctx + ".k must be >= 0");
    if (s.contains("ell")) {
      sel.ell = s["ell"].get<int>();
      if (sel.ell < 0) throw std::invalid_argument(ctx + ".ell must be >= 0");
    }
    if (s.contains("kappa")) {
      sel.kappa = s["kappa"].get<int>();
      if (*sel.kappa == 0) throw std::invalid_argument(ctx + ".kappa must be nonzero");
      int ell_from_kappa = *sel.kappa > 0 ? *sel.kappa : -*sel.kappa - 1;
      if (!s.contains("ell"))
        sel.ell = ell_from_kappa;
      else if (sel.ell != ell_from_kappa)
        throw std::invalid_argument(ctx + ": ell and kappa disagree");
    } else if (!s.contains("ell")) {
      throw std::invalid_argument(ctx + ": need ell or kappa");
    }
    cfg.states.push_back(sel);
  }

  cfg.order = j.value("order", 14u);
  if (cfg.order < 1) throw std::invalid_argument("config.order must be >= 1");

  if (j.contains("pade")) {
    for (const auto& p : j["pade"]) {
      if (!p.is_array() || p.size() != 2)
        throw std::invalid_argument("config.pade entries must be [i, j]");
      cfg.pade_requests.emplace_back(p[0].get<unsigned>(), p[1].get<unsigned>());
    }
  }

  std::string br = j.value("branch", "+");
  if (br == "+")
    cfg.branch = EnergyBranch::Plus;
  else if (br == "-")
    cfg.branch = EnergyBranch::Minus;
  else
    throw std::invalid_argument("config.branch: expected \"+\" or \"-\"");

  cfg.report_mass = j.value("report_mass", false);
  cfg.check_tol = j.value("check_tol", 2e-3);

  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    cfg.oracle.steps = o.value("steps", cfg.oracle.steps);
    cfg.oracle.r_min = o.value("r_min", cfg.oracle.r_min);
    cfg.oracle.r_max = o.value("r_max", cfg.oracle.r_max);
    cfg.oracle.bisection_tol = o.value("bisection_tol", cfg.oracle.bisection_tol);
    if (o.contains("bracket")) {
      cfg.oracle.energy_bracket = {o["bracket"][0].get<double>(),
                                   o["bracket"][1].get<double>()};
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace pslet
