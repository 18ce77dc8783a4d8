#include "spintime/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "spintime/error.hpp"

namespace spintime::harness {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' expects a number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("config key '" + key + "' expects true or false, got '" + v + "'");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

Signature ExperimentConfig::signature() const {
  if (!diag.empty()) return Signature::from_diag(diag);
  return Signature::pq(p, q);
}

void ExperimentConfig::validate() const {
  if (!(tol_eig > 0) || !(tol_rep > 0) || !(tol_exp > 0)) throw UsageError("tolerances must be positive");
  if (format != "json" && format != "csv" && format != "text")
    throw UsageError("format must be json, csv or text, got '" + format + "'");
  if (p < 0 || q < 0 || p + q > kMaxGenerators) throw UsageError("signature counts out of range");
  if (std::any_of(cells.begin(), cells.end(), [](int n) { return n < 1; }))
    throw UsageError("cell counts must be positive");
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "suite") {
    cfg.suite = value;
  } else if (key == "signature") {
    const auto v = parse_int_list(value);
    if (v.size() != 2) throw UsageError("signature expects p,q");
    cfg.p = v[0];
    cfg.q = v[1];
  } else if (key == "diag") {
    std::vector<int> d;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item == "+" || item == "+1" || item == "1") d.push_back(1);
      else if (item == "-" || item == "-1") d.push_back(-1);
      else throw UsageError("diag entries must be + or -, got '" + item + "'");
    }
    cfg.diag = d;
    cfg.p = static_cast<int>(std::count(d.begin(), d.end(), 1));
    cfg.q = static_cast<int>(d.size()) - cfg.p;
  } else if (key == "cells") {
    cfg.cells = parse_int_list(value);
  } else if (key == "half") {
    cfg.half = parse_bool(key, value);
  } else if (key == "seed") {
    std::uint64_t s = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
      throw UsageError("seed must be a non-negative integer");
    cfg.seed = s;
  } else if (key == "tol_eig") {
    cfg.tol_eig = parse_double(key, value);
  } else if (key == "tol_rep") {
    cfg.tol_rep = parse_double(key, value);
  } else if (key == "tol_exp") {
    cfg.tol_exp = parse_double(key, value);
  } else if (key == "out") {
    cfg.output = value;
  } else if (key == "format") {
    cfg.format = value;
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    apply_setting(base, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)));
  }
  return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace spintime::harness
