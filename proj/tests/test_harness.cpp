#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "spintime/error.hpp"
#include "spintime/harness/config.hpp"
#include "spintime/harness/report.hpp"
#include "spintime/harness/suites.hpp"

using namespace spintime;
using namespace spintime::harness;

TEST_CASE("empty report list is an empty JSON array") {
  std::ostringstream os;
  emit_json(os, {});
  CHECK(json::parse(os.str()) == json::array());
}

TEST_CASE("json round trip") {
  Report r;
  r.claim_id = "X";
  r.inputs = {{"N", 3}};
  r.set_table({"a", "b"}, json::array({json::array({1, "x"})}));
  r.expected_value = 4;
  r.provenance = "DERIVED";
  r.status = Status::Fail;
  r.runtime_ms = 1.5;
  CHECK(report_from_json(to_json(r, true)) == r);
  const auto j = to_json(r);
  CHECK(j["runtime_ms"].is_null());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"claim_id", "inputs", "computed", "expected", "status", "runtime_ms"});
  CHECK_THROWS_AS(report_from_json(json{{"claim_id", 1}}), ParseError);
  CHECK_THROWS_AS(status_from_string("maybe"), ParseError);
}

TEST_CASE("every expected value carries provenance") {
  ExperimentConfig cfg;
  for (const auto& r : run_suite(cfg)) {
    CAPTURE(r.claim_id);
    if (!r.expected_value.is_null()) {
      CHECK((r.provenance == "PAPER" || r.provenance == "DERIVED" || r.provenance == "TRIVIAL"));
    }
  }
}

TEST_CASE("contraction csv schema") {
  ExperimentConfig cfg;
  cfg.suite = "contraction";
  cfg.cells = {1, 2, 3};
  std::ostringstream os;
  emit_csv(os, run_suite(cfg));
  CHECK(os.str().rfind("N,residual,slope_fit\n", 0) == 0);
  CHECK(os.str().find("claim_id,status,provenance,expected\n") != std::string::npos);
}

TEST_CASE("deterministic output") {
  ExperimentConfig cfg;
  cfg.suite = "triality";
  std::ostringstream a, b;
  emit_json(a, run_suite(cfg));
  emit_json(b, run_suite(cfg));
  CHECK(a.str() == b.str());
  cfg.seed = 1;
  std::ostringstream c;
  emit_json(c, run_suite(cfg));
  CHECK(c.str() != a.str());
}

TEST_CASE("suite selection") {
  ExperimentConfig cfg;
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_suite(cfg), UsageError);
  cfg.suite = "dims";
  const auto r = run_suite(cfg);
  REQUIRE(r.size() == 1);
  CHECK(r[0].claim_id == "E:DIM");
  CHECK(exit_code(r) == 0);
  CHECK(suite_names().back() == "all");
}

TEST_CASE("resource caps become skipped reports") {
  setenv("SPINTIME_MAX_DIM", "4096", 1);
  ExperimentConfig cfg;
  cfg.suite = "contraction";
  cfg.cells = {1, 5};
  const auto r = run_suite(cfg);
  unsetenv("SPINTIME_MAX_DIM");
  REQUIRE(!r.empty());
  CHECK(r[0].status == Status::Skipped);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(
      "# comment\n"
      "suite = killing\n"
      "signature = 2,4   # trailing\n"
      "cells = 1, 2,3\n"
      "half = false\n"
      "seed = 99\n"
      "tol_eig = 1e-7\n"
      "format = csv\n");
  CHECK(cfg.suite == "killing");
  CHECK(cfg.p == 2);
  CHECK(cfg.q == 4);
  CHECK(cfg.cells == std::vector<int>{1, 2, 3});
  CHECK(!cfg.half);
  CHECK(cfg.seed == 99);
  CHECK(cfg.tol_eig == 1e-7);
  CHECK(cfg.format == "csv");
  CHECK(parse_config("diag = -,+,+,-").signature() == Signature::from_diag({-1, 1, 1, -1}));
  CHECK_THROWS_AS(parse_config("bogus = 1"), UsageError);
  CHECK_THROWS_AS(parse_config("suite"), UsageError);
  CHECK_THROWS_AS(parse_config("seed = -4"), UsageError);
  CHECK_THROWS_AS(parse_config("tol_eig = 0").validate(), UsageError);
  CHECK_THROWS_AS(parse_config("format = xml").validate(), UsageError);
  CHECK_THROWS_AS(parse_config("cells = 0").validate(), UsageError);
  CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), IoError);
}

TEST_CASE("text summary") {
  Report a, b;
  a.status = Status::Pass;
  b.status = Status::Fail;
  b.computed["note"] = "why";
  std::ostringstream os;
  emit_text(os, {a, b});
  CHECK(os.str().find("2 reports: 1 pass, 1 fail, 0 measured, 0 skipped") != std::string::npos);
  CHECK(os.str().find("why") != std::string::npos);
  CHECK(exit_code({a, b}) == 1);
}

TEST_CASE("metadata") {
  const auto m = metadata({}, 5);
  CHECK(m["prng"] == "mt19937_64");
  CHECK(m["seed"] == 5);
  CHECK(m["runtimes_ms"].is_array());
}
