#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spintime/clifford.hpp"

namespace spintime::harness {

struct ExperimentConfig {
  std::string suite = "all";
  int p = 3;
  int q = 3;
  std::vector<int> diag;   // overrides (p, q) ordering when non-empty
  std::vector<int> cells;  // empty: each suite picks its own default list
  bool half = true;
  std::uint64_t seed = 12345;
  double tol_eig = 1e-9;
  double tol_rep = 1e-12;
  double tol_exp = 1e-10;
  std::string output;  // empty: stdout
  std::string format = "json";

  Signature signature() const;
  // UsageError on non-positive tolerances, bad format, bad cell counts.
  void validate() const;
};

// key = value lines, '#' comments. Keys: suite, signature, diag, cells, half,
// seed, tol_eig, tol_rep, tol_exp, out, format.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

std::vector<int> parse_int_list(const std::string& text);

}  // namespace spintime::harness
