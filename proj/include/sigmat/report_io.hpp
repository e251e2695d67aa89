#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sigmat/extremal.hpp"

namespace sigmat {

// Run provenance embedded in every report file. Re-running the same command
// line reproduces identical verdicts; only timestamps and wall times differ.
struct RunManifest {
  std::string command_line;
  std::string engine;
  std::string version;
  std::string timestamp_utc;
  double tie_tolerance = kTieTolerance;
  long long budget = kDefaultBudget;
  std::string exponent_spec;

  struct RowSummary {
    std::string theorem;
    int n = 0;
    double f = 0.0;
    long long domain_size = 0;
    std::string verdict;
  };
  std::vector<RowSummary> rows;
};

std::string iso8601_utc_now();

nlohmann::json to_json(const Domain& d);
Domain domain_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtremalReport& r);
ExtremalReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChemRelaxationRecord& r);
ChemRelaxationRecord relaxation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunManifest& m);

// Whole-file payloads: {"type": ..., "manifest": ..., "report": ...}
nlohmann::json report_file_json(const RunManifest& m, const ExtremalReport& r);
nlohmann::json relaxation_file_json(const RunManifest& m, const ChemRelaxationRecord& r,
                                    Verdict verdict, const std::string& note);

// RFC 4180 CSV with the fixed columns
//   n,f,optimum,optimizer_count,runner_up_margin,verdict
std::string csv_header();
std::string csv_row(const ExtremalReport& r);
std::string csv_escape(const std::string& field);

// Shortest round-trip formatting for doubles ("inf" for infinities).
std::string format_double(double v);

}  // namespace sigmat
