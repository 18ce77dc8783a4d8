// Command-line front end for the verification suites and experiments.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spintime/error.hpp"
#include "spintime/harness/config.hpp"
#include "spintime/harness/report.hpp"
#include "spintime/harness/suites.hpp"

using namespace spintime;
using namespace spintime::harness;

namespace {

std::pair<int, int> parse_pair(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2) throw UsageError("expected a,b, got '" + text + "'");
  return {v[0], v[1]};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const ExperimentConfig& cfg, const std::vector<Report>& reports) {
  std::ostringstream body;
  if (cfg.format == "json") emit_json(body, reports);
  else if (cfg.format == "csv") emit_csv(body, reports);
  else emit_text(body, reports);

  if (cfg.output.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(cfg.output);
  if (!out || !(out << body.str())) throw IoError("cannot write '" + cfg.output + "'");
  std::ofstream meta(cfg.output + ".meta.json");
  if (!meta || !(meta << metadata(reports, cfg.seed).dump(2) << "\n"))
    throw IoError("cannot write '" + cfg.output + ".meta.json'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spintime: Clifford and spin-algebra verification harness"};
  app.require_subcommand(1);

  std::string config_path, signature, diag, cells, seed, format, out;
  bool half = true;
  bool half_set = false;
  app.add_option("--config", config_path, "key = value config file; flags override it");
  app.add_option("--signature", signature, "p,q");
  app.add_option("--diag", diag, "explicit metric order, e.g. +,+,-,-");
  app.add_option("--cells", cells, "N[,N...]");
  app.add_flag("--half,!--no-half", half, "generator coefficient 1/2 (default) or 1")
      ->each([&](const std::string&) { half_set = true; });
  app.add_option("--seed", seed, "PRNG seed");
  app.add_option("--format", format, "json | csv | text");
  app.add_option("--out", out, "output path (also writes <out>.meta.json)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'");

  std::string generator = "1,2";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum of a quantified bivector J[a,b]");
  spectrum_cmd->add_option("--generator", generator, "a,b");

  int index = 1;
  auto* contract = app.add_subcommand("contract", "centralization residual versus N");
  contract->add_option("--index", index, "orbital index m in 1..4");

  std::string pair_a = "1,5", pair_b = "2,5";
  auto* metric = app.add_subcommand("metric-scaling", "skew/sym ratio of a quantified metric pair");
  metric->add_option("--pair-a", pair_a, "a,b");
  metric->add_option("--pair-b", pair_b, "a,b");

  std::string trace_file;
  auto* trace = app.add_subcommand("trace", "exact trace of a gamma polynomial");
  trace->add_option("file", trace_file, "polynomial file")->required();

  std::string report_file;
  auto* report = app.add_subcommand("report", "re-emit a saved JSON report in another format");
  report->add_option("file", report_file, "JSON report")->required();

  for (auto* sub : {verify, spectrum_cmd, contract, metric, trace, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    if (!signature.empty()) apply_setting(cfg, "signature", signature);
    if (!diag.empty()) apply_setting(cfg, "diag", diag);
    if (!cells.empty()) apply_setting(cfg, "cells", cells);
    if (half_set) cfg.half = half;
    if (!seed.empty()) apply_setting(cfg, "seed", seed);
    if (!format.empty()) apply_setting(cfg, "format", format);
    if (!out.empty()) apply_setting(cfg, "out", out);
    cfg.validate();

    std::vector<Report> reports;
    if (*verify) {
      cfg.suite = suite;
      reports = run_suite(cfg);
    } else if (*spectrum_cmd) {
      reports.push_back(spectrum_report(cfg, parse_pair(generator)));
    } else if (*contract) {
      if (index < 1 || index > 4) throw UsageError("--index must be in 1..4");
      reports.push_back(contraction_report(cfg, index));
    } else if (*metric) {
      reports.push_back(metric_scaling_report(cfg, parse_pair(pair_a), parse_pair(pair_b)));
    } else if (*trace) {
      reports.push_back(trace_report(cfg, read_file(trace_file), trace_file));
    } else if (*report) {
      const std::string text = read_file(report_file);
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw ParseError(std::string("cannot parse report: ") + e.what());
      }
      if (!j.is_array()) throw ParseError("report file must hold a JSON array");
      for (const auto& item : j) reports.push_back(report_from_json(item));
    }
    emit(cfg, reports);
    return exit_code(reports);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
