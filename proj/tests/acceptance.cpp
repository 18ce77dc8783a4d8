// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every
// failing criterion is in kDocumentedFailures, 1 otherwise.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "spintime/harness/suites.hpp"
#include "spintime/metric.hpp"

using namespace spintime;
using namespace spintime::harness;

namespace {

constexpr double kTolEig = 1e-9;
constexpr double kTolRank = 1e-9;
constexpr double kTolExp = 1e-10;

// Criterion 13: 1/(cT)^2 at T = 5.39e-44 s is 3.83e69 m^-2, below the
// required interval. Kept as a recorded failure.
const std::set<int> kDocumentedFailures = {13};

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::vector<Report> suite(const std::string& name, std::vector<int> cells = {}) {
  ExperimentConfig cfg;
  cfg.suite = name;
  cfg.cells = std::move(cells);
  cfg.tol_eig = kTolEig;
  cfg.tol_exp = kTolExp;
  return run_suite(cfg);
}

const Report& find(const std::vector<Report>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.claim_id == id) return r;
  throw std::runtime_error("missing claim " + id);
}

bool passed(const std::vector<Report>& rs, std::initializer_list<const char*> ids, std::string& detail) {
  bool ok = true;
  for (const char* id : ids) {
    const auto& r = find(rs, id);
    if (r.status != Status::Pass) {
      ok = false;
      detail += std::string(detail.empty() ? "" : "; ") + id + " " + to_string(r.status);
    }
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Killing signature (9,6), blocks (2,2,0,-1) sum 3", 1000,
       [] {
         Outcome o;
         const auto rs = suite("killing");
         o.ok = passed(rs, {"E:K", "PROP-BLOCKS"}, o.detail);
         const auto& b = find(rs, "PROP-BLOCKS").computed;
         o.ok = o.ok && b["off_block_nonzero"] == 0;
         if (o.detail.empty()) o.detail = "inertia " + find(rs, "E:K").computed["inertia_exact"].dump() +
                                          ", block sum " + b["signature_sum"].dump();
         return o;
       }},
      {2, "Dimension ladder 1,2,4,16,65536 and deltas", 1000,
       [] {
         Outcome o;
         o.ok = passed(suite("dims"), {"E:DIM"}, o.detail);
         return o;
       }},
      {3, "Curvature commutator [g_m5, g_m'5] = +-2 g_mm'", 1000,
       [] {
         Outcome o;
         o.ok = passed(suite("curvature"), {"E:GGG"}, o.detail);
         return o;
       }},
      {4, "Quantification homomorphism, N = 2,3,4, 105 pairs", 30000,
       [] {
         Outcome o;
         const auto rs = suite("quantify", {2, 3, 4});
         o.ok = passed(rs, {"QUANT-HOM"}, o.detail);
         for (const auto& row : find(rs, "QUANT-HOM").computed["table"]["rows"])
           o.ok = o.ok && row[1] == 105;
         return o;
       }},
      {5, "Orbital brackets [x^m, p_m'] = -delta g_mm ihat, N <= 4", 30000,
       [] {
         Outcome o;
         o.ok = passed(suite("orbital", {1, 2, 3, 4}), {"ORB-BRACKET"}, o.detail);
         return o;
       }},
      {6, "Spectra integer-spaced, symmetric, bounded; Umklapp additivity", 60000,
       [] {
         Outcome o;
         o.ok = passed(suite("spectra", {1, 2, 3, 4}), {"SPECTRUM-BOUND", "UMKLAPP"}, o.detail);
         return o;
       }},
      {7, "Centralization residual non-increasing, drop >= 2 over N = 1..6", 600000,
       [] {
         Outcome o;
         const auto rs = suite("contraction", {1, 2, 3, 4, 5, 6});
         o.ok = passed(rs, {"CENTRALIZATION"}, o.detail);
         const auto& c = find(rs, "CENTRALIZATION").computed;
         char buf[96];
         std::snprintf(buf, sizeof buf, "drop %.3f, fitted slope %.4f", c["drop_factor"].get<double>(),
                       c["slope"].get<double>());
         o.detail += (o.detail.empty() ? "" : "; ") + std::string(buf);
         return o;
       }},
      {8, "tr(Delta_a Delta_b) = lambda K_ab over 120 pairs; isomorphism", 10000,
       [] {
         Outcome o;
         const auto rs = suite("adjoint");
         o.ok = passed(rs, {"E:GDELTA", "ADJ-ISO"}, o.detail);
         const auto& g = find(rs, "E:GDELTA").computed;
         o.ok = o.ok && g["pairs"] == 120;
         o.detail += (o.detail.empty() ? "" : "; ") + std::string("lambda ") + g["lambda"].dump();
         return o;
       }},
      {9, "Metric skew/sym ratio decreasing N = 2..4; distinct skew = 0", 60000,
       [] {
         Outcome o;
         o.ok = passed(suite("metric", {1, 2, 3, 4}), {"E:MMMM"}, o.detail);
         return o;
       }},
      {10, "Flavor tiers (1,1,2,12), U/D/R/G/B slots, CAR relations", 1000,
       [] {
         Outcome o;
         o.ok = passed(suite("flavor"), {"E:FFERMION", "FLAVOR-ASSIGN", "GRASSMANN-CAR"}, o.detail);
         return o;
       }},
      {11, "Triality pairing rank 8 on 100 random vectors", 5000,
       [] {
         Outcome o;
         const auto rs = suite("triality");
         o.ok = passed(rs, {"TRIALITY-RANK"}, o.detail);
         const auto& r = find(rs, "TRIALITY-RANK");
         o.ok = o.ok && r.inputs["rank_tol"] == kTolRank && r.inputs["samples"] == 100;
         o.detail += (o.detail.empty() ? "" : "; ") + std::string("full rank ") + r.computed["full_rank"].dump();
         return o;
       }},
      {12, "Dynamics orthogonality, gamma traces, finite Green contractions", 10000,
       [] {
         Outcome o;
         o.ok = passed(suite("dynamics"), {"DYN-ORTHO", "TRACE-GAMMA", "GREEN-FINITE"}, o.detail);
         return o;
       }},
      {13, "Curvature unit 1/(cT)^2 in [1e70, 1e71] m^-2", 1,
       [] {
         Outcome o;
         const double v = curvature_unit(5.39e-44);
         o.ok = v >= 1e70 && v <= 1e71;
         char buf[64];
         std::snprintf(buf, sizeof buf, "1/(cT)^2 = %.4e m^-2", v);
         o.detail = buf;
         return o;
       }},
  };

  int undocumented = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && ms > c.limit_ms) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    const bool documented = kDocumentedFailures.count(c.id) > 0;
    if (!o.ok && !documented) ++undocumented;
    std::printf("%s %2d %s [%.1f ms, limit %.0f ms]%s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, ms, c.limit_ms,
                o.detail.empty() ? "" : ": ", o.detail.c_str(), !o.ok && documented ? " (documented failure)" : "");
  }
  return undocumented == 0 ? 0 : 1;
}
