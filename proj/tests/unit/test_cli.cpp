#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "pslet/app.hpp"

using namespace pslet;

namespace {

std::string write_temp_config(const std::string& body) {
  std::string path = "pslet_test_config.json";
  std::ofstream out(path);
  out << body;
  return path;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = app::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

const char* kMixedCoulombConfig = R"({
  "schema": 1,
  "equation": "dirac",
  "mass": "1",
  "potential": {
    "vector": [{"coeff": "-0.5", "power": -1}],
    "scalar": [{"coeff": "-0.5", "power": -1}]
  },
  "states": [{"k": 0, "ell": 0}, {"k": 1, "ell": 0}],
  "order": 6
})";

}  // namespace

TEST_CASE("config parsing and validation") {
  CHECK_NOTHROW(parse_config(kMixedCoulombConfig));

  CHECK_THROWS_AS(parse_config("{\"schema\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("{\"schema\": 1, \"mass\": 1, \"states\": []}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_config(R"({"schema":1,"mass":1,"states":[{"k":0,"ell":1,"kappa":1}],
                      "precision_digits": 10})"),
      std::invalid_argument);
  // kappa/ell inconsistency
  CHECK_THROWS_AS(
      parse_config(R"({"schema":1,"mass":1,"states":[{"k":0,"ell":2,"kappa":1}]})"),
      std::invalid_argument);
  // kappa alone determines ell
  auto cfg = parse_config(R"({"schema":1,"mass":1,"states":[{"k":0,"kappa":-3}]})");
  CHECK(cfg.states[0].ell == 2);
}

TEST_CASE("solve command emits all three formats deterministically") {
  std::string path = write_temp_config(kMixedCoulombConfig);
  for (const char* format : {"text", "csv", "json"}) {
    std::string a, b;
    CHECK(run_cli({"solve", "--config", path, "--format", format}, &a) == 0);
    CHECK(run_cli({"solve", "--config", path, "--format", format}, &b) == 0);
    CHECK(a == b);
    CHECK(!a.empty());
  }
  std::string csv;
  run_cli({"solve", "--config", path, "--format", "csv"}, &csv);
  CHECK(csv.rfind("state,order,value,method", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("solve is parallel-stable") {
  std::string path = write_temp_config(kMixedCoulombConfig);
  std::string serial, parallel;
  CHECK(run_cli({"solve", "--config", path, "--format", "csv"}, &serial) == 0);
  CHECK(run_cli({"solve", "--config", path, "--format", "csv", "--jobs", "4"},
                &parallel) == 0);
  CHECK(serial == parallel);
  std::remove(path.c_str());
}

TEST_CASE("compare reports expansion, oracle and exact in agreement") {
  std::string path = write_temp_config(R"({
    "schema": 1,
    "equation": "kg",
    "mass": "1",
    "potential": {"vector": [{"coeff": "-0.5", "power": -1}]},
    "states": [{"k": 0, "ell": 0}],
    "order": 5,
    "oracle": {"steps": 40000}
  })");
  std::string out;
  int rc = run_cli({"compare", "--config", path, "--check"}, &out);
  CHECK(rc == 0);
  CHECK(out.find("oracle") != std::string::npos);
  CHECK(out.find("exact") != std::string::npos);
  CHECK(out.find("0.70710") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("validation failures exit with code 1") {
  std::string out, err;
  CHECK(run_cli({"solve", "--config", "does_not_exist.json"}, &out, &err) ==
        app::kExitValidation);
  CHECK(run_cli({"table", "9"}, &out, &err) == app::kExitValidation);

  std::string path = write_temp_config("{\"schema\": 1}");
  CHECK(run_cli({"solve", "--config", path}, &out, &err) == app::kExitValidation);
  std::remove(path.c_str());
}

TEST_CASE("solver failures exit with code 2") {
  // supercritical Coulomb collapses at build time
  std::string path = write_temp_config(R"({
    "schema": 1,
    "equation": "kg",
    "mass": "1",
    "potential": {"vector": [{"coeff": "-2", "power": -1}]},
    "states": [{"k": 0, "ell": 0}],
    "order": 3
  })");
  std::string out, err;
  CHECK(run_cli({"solve", "--config", path}, &out, &err) == app::kExitSolver);
  CHECK(err.find("subcritical") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("table 5 output is byte-identical across jobs settings") {
  std::string a, b;
  CHECK(run_cli({"table", "5", "--format", "csv"}, &a) == 0);
  CHECK(run_cli({"table", "5", "--format", "csv", "--jobs", "3"}, &b) == 0);
  CHECK(a == b);
  CHECK(a.find("reference") != std::string::npos);
}
