#include "sigmat/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>

#include "sigmat/version.hpp"

namespace sigmat {

using nlohmann::json;

std::string iso8601_utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

DomainKind kind_from_string(const std::string& s) {
  if (s == "int-seqs") return DomainKind::IntegerSequences;
  if (s == "graphical") return DomainKind::GraphicalSequences;
  if (s == "trees") return DomainKind::TreeSequences;
  if (s == "chemical") return DomainKind::ChemicalSequences;
  throw std::invalid_argument("unknown domain kind '" + s + "'");
}

Direction direction_from_string(const std::string& s) {
  if (s == "max") return Direction::Max;
  if (s == "min") return Direction::Min;
  throw std::invalid_argument("unknown direction '" + s + "'");
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "confirmed") return Verdict::Confirmed;
  if (s == "refuted") return Verdict::Refuted;
  if (s == "tie-detected") return Verdict::TieDetected;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

json family_to_json(const std::vector<DegreeSequence>& family) {
  json arr = json::array();
  for (const auto& s : family) arr.push_back(s.vec());
  return arr;
}

std::vector<DegreeSequence> family_from_json(const json& arr) {
  std::vector<DegreeSequence> out;
  for (const auto& item : arr) out.emplace_back(item.get<std::vector<int>>());
  return out;
}

json margin_to_json(double margin) {
  if (std::isinf(margin)) return nullptr;
  return margin;
}

double margin_from_json(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

}  // namespace

json to_json(const Domain& d) {
  return json{{"kind", domain_kind_name(d.kind)},
              {"n", d.n},
              {"lo", d.lo},
              {"hi", d.hi},
              {"min_degree", d.min_degree},
              {"max_degree", d.max_degree},
              {"graphical_only", d.graphical_only}};
}

Domain domain_from_json(const json& j) {
  Domain d;
  d.kind = kind_from_string(j.at("kind").get<std::string>());
  d.n = j.at("n").get<int>();
  d.lo = j.at("lo").get<int>();
  d.hi = j.at("hi").get<int>();
  d.min_degree = j.at("min_degree").get<int>();
  d.max_degree = j.at("max_degree").get<int>();
  d.graphical_only = j.at("graphical_only").get<bool>();
  return d;
}

json to_json(const ExtremalReport& r) {
  return json{{"domain", to_json(r.domain)},
              {"exponent_desc", r.exponent_desc},
              {"f", r.f},
              {"direction", direction_name(r.direction)},
              {"optimum", r.optimum},
              {"optimizers", family_to_json(r.optimizers)},
              {"runner_up_margin", margin_to_json(r.runner_up_margin)},
              {"domain_size", r.domain_size},
              {"sequences_scanned", r.sequences_scanned},
              {"wall_time_ms", r.wall_time_ms},
              {"theorem", r.theorem},
              {"predicate", r.predicate},
              {"asserted", r.asserted},
              {"expected", family_to_json(r.expected)},
              {"allowed_extras", family_to_json(r.allowed_extras)},
              {"verdict", verdict_name(r.verdict)},
              {"note", r.note}};
}

ExtremalReport report_from_json(const json& j) {
  ExtremalReport r;
  r.domain = domain_from_json(j.at("domain"));
  r.exponent_desc = j.at("exponent_desc").get<std::string>();
  r.f = j.at("f").get<double>();
  r.direction = direction_from_string(j.at("direction").get<std::string>());
  r.optimum = j.at("optimum").get<double>();
  r.optimizers = family_from_json(j.at("optimizers"));
  r.runner_up_margin = margin_from_json(j.at("runner_up_margin"));
  r.domain_size = j.at("domain_size").get<long long>();
  r.sequences_scanned = j.at("sequences_scanned").get<long long>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  r.theorem = j.at("theorem").get<std::string>();
  r.predicate = j.at("predicate").get<std::string>();
  r.asserted = j.at("asserted").get<bool>();
  r.expected = family_from_json(j.at("expected"));
  r.allowed_extras = family_from_json(j.at("allowed_extras"));
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.note = j.at("note").get<std::string>();
  return r;
}

json to_json(const ChemRelaxationRecord& r) {
  return json{{"n", r.n},          {"x1", r.x1},
              {"x2", r.x2},        {"x3", r.x3},
              {"x4", r.x4},        {"objective", r.objective},
              {"gap_to_quarter", r.gap_to_quarter}};
}

ChemRelaxationRecord relaxation_from_json(const json& j) {
  ChemRelaxationRecord r;
  r.n = j.at("n").get<int>();
  r.x1 = j.at("x1").get<double>();
  r.x2 = j.at("x2").get<double>();
  r.x3 = j.at("x3").get<double>();
  r.x4 = j.at("x4").get<double>();
  r.objective = j.at("objective").get<double>();
  r.gap_to_quarter = j.at("gap_to_quarter").get<double>();
  return r;
}

json to_json(const RunManifest& m) {
  json rows = json::array();
  for (const auto& row : m.rows)
    rows.push_back(json{{"theorem", row.theorem},
                        {"n", row.n},
                        {"f", row.f},
                        {"domain_size", row.domain_size},
                        {"verdict", row.verdict}});
  return json{{"command_line", m.command_line},
              {"engine", m.engine.empty() ? kEngineName : m.engine},
              {"version", m.version.empty() ? kEngineVersion : m.version},
              {"timestamp_utc", m.timestamp_utc},
              {"tie_tolerance", m.tie_tolerance},
              {"budget", m.budget},
              {"exponent_spec", m.exponent_spec},
              {"rows", rows}};
}

json report_file_json(const RunManifest& m, const ExtremalReport& r) {
  return json{{"type", "extremal_report"}, {"manifest", to_json(m)}, {"report", to_json(r)}};
}

json relaxation_file_json(const RunManifest& m, const ChemRelaxationRecord& r, Verdict verdict,
                          const std::string& note) {
  return json{{"type", "chem_relaxation"},
              {"manifest", to_json(m)},
              {"report", to_json(r)},
              {"verdict", verdict_name(verdict)},
              {"note", note}};
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_header() { return "n,f,optimum,optimizer_count,runner_up_margin,verdict\r\n"; }

std::string csv_row(const ExtremalReport& r) {
  std::string row;
  row += std::to_string(r.domain.n);
  row += ',';
  row += format_double(r.f);
  row += ',';
  row += format_double(r.optimum);
  row += ',';
  row += std::to_string(r.optimizers.size());
  row += ',';
  row += format_double(r.runner_up_margin);
  row += ',';
  row += csv_escape(verdict_name(r.verdict));
  row += "\r\n";
  return row;
}

}  // namespace sigmat
