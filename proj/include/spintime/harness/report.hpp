#pragma once

#include "json.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace spintime::harness {

// Insertion-ordered so reports serialize fields in schema order.
using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Measured, Skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// One checked or measured claim. A table, when present, lives in
// computed["table"] as {"columns": [...], "rows": [[...], ...]} and is what
// the CSV emitter flattens.
struct Report {
  std::string claim_id;
  json inputs = json::object();
  json computed = json::object();
  json expected_value;     // null when the claim has no expected value
  std::string provenance;  // PAPER, DERIVED or TRIVIAL; empty without expected value
  Status status = Status::Measured;
  double runtime_ms = 0;

  void set_table(std::vector<std::string> columns, json rows);
  friend bool operator==(const Report&, const Report&) = default;
};

// runtime_ms is written as null unless with_runtime is set, so that the main
// output is byte-identical across runs; timings go to the metadata sidecar.
json to_json(const Report& r, bool with_runtime = false);
Report report_from_json(const json& j);

void emit_json(std::ostream& os, const std::vector<Report>& reports);
void emit_csv(std::ostream& os, const std::vector<Report>& reports);
void emit_text(std::ostream& os, const std::vector<Report>& reports);

// {"prng", "seed", "generated_at", "runtimes_ms": [{"claim_id", "runtime_ms"}, ...]}
json metadata(const std::vector<Report>& reports, std::uint64_t seed);

// 0 when no report failed, else 1.
int exit_code(const std::vector<Report>& reports);

}  // namespace spintime::harness
