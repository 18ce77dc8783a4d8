#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spintime/harness/config.hpp"
#include "spintime/harness/report.hpp"

namespace spintime::harness {

// dims, killing, clifford, curvature, quantify, orbital, spectra,
// contraction, adjoint, metric, flavor, triality, dynamics, curvature-unit;
// "all" runs every one of them in that order.
const std::vector<std::string>& suite_names();

// UsageError for an unknown suite. Size-cap violations become `skipped`
// reports; other library errors become `fail` reports carrying the message.
std::vector<Report> run_suite(const ExperimentConfig& cfg);

// Single-experiment reports behind the non-verify subcommands.
Report spectrum_report(const ExperimentConfig& cfg, std::pair<int, int> generator);
Report contraction_report(const ExperimentConfig& cfg, int m);
Report metric_scaling_report(const ExperimentConfig& cfg, std::pair<int, int> a, std::pair<int, int> b);
Report trace_report(const ExperimentConfig& cfg, const std::string& text, const std::string& source);

}  // namespace spintime::harness
