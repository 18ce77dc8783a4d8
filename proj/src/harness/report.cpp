#include "spintime/harness/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <sstream>

#include "spintime/error.hpp"
#include "spintime/rng.hpp"

namespace spintime::harness {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Measured: return "measured";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "measured") return Status::Measured;
  if (s == "skipped") return Status::Skipped;
  throw ParseError("unknown report status '" + s + "'");
}

void Report::set_table(std::vector<std::string> columns, json rows) {
  computed["table"] = json{{"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

json to_json(const Report& r, bool with_runtime) {
  json j;
  j["claim_id"] = r.claim_id;
  j["inputs"] = r.inputs;
  j["computed"] = r.computed;
  j["expected"] = r.expected_value.is_null() ? json(nullptr)
                                             : json{{"value", r.expected_value}, {"provenance", r.provenance}};
  j["status"] = to_string(r.status);
  j["runtime_ms"] = with_runtime ? json(r.runtime_ms) : json(nullptr);
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.inputs = j.at("inputs");
    r.computed = j.at("computed");
    const json& e = j.at("expected");
    if (!e.is_null()) {
      r.expected_value = e.at("value");
      r.provenance = e.at("provenance").get<std::string>();
    }
    r.status = status_from_string(j.at("status").get<std::string>());
    const json& rt = j.at("runtime_ms");
    r.runtime_ms = rt.is_null() ? 0.0 : rt.get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

void emit_json(std::ostream& os, const std::vector<Report>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  os << arr.dump(2) << "\n";
}

namespace {

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

void emit_csv(std::ostream& os, const std::vector<Report>& reports) {
  // Table blocks first, then one summary block; blocks are separated by a
  // blank line.
  bool first = true;
  for (const auto& r : reports) {
    if (!r.computed.is_object() || !r.computed.contains("table")) continue;
    const json& t = r.computed["table"];
    if (!first) os << "\n";
    first = false;
    const auto& cols = t["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
    os << "\n";
    for (const auto& row : t["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << "\n";
    }
  }
  if (!first) os << "\n";
  os << "claim_id,status,provenance,expected\n";
  for (const auto& r : reports)
    os << csv_cell(r.claim_id) << "," << to_string(r.status) << "," << csv_cell(r.provenance) << ","
       << csv_cell(r.expected_value.is_null() ? json("") : r.expected_value) << "\n";
}

void emit_text(std::ostream& os, const std::vector<Report>& reports) {
  std::map<Status, int> counts;
  for (const auto& r : reports) {
    ++counts[r.status];
    os << std::left << std::setw(9) << to_string(r.status) << r.claim_id;
    if (!r.provenance.empty()) os << "  (" << r.provenance << ")";
    if (r.computed.contains("note")) os << "  " << r.computed["note"].get<std::string>();
    os << "\n";
  }
  os << reports.size() << " reports: " << counts[Status::Pass] << " pass, " << counts[Status::Fail] << " fail, "
     << counts[Status::Measured] << " measured, " << counts[Status::Skipped] << " skipped\n";
}

json metadata(const std::vector<Report>& reports, std::uint64_t seed) {
  json m;
  m["prng"] = Rng::kName;
  m["seed"] = seed;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  m["generated_at"] = ts.str();
  json rt = json::array();
  for (const auto& r : reports) rt.push_back({{"claim_id", r.claim_id}, {"runtime_ms", r.runtime_ms}});
  m["runtimes_ms"] = rt;
  return m;
}

int exit_code(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return 1;
  return 0;
}

}  // namespace spintime::harness
