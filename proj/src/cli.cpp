#include "sigmat/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigmat/extremal.hpp"
#include "sigmat/graphical.hpp"
#include "sigmat/indices.hpp"
#include "sigmat/report_io.hpp"
#include "sigmat/version.hpp"

namespace sigmat::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kUsage = 2;
constexpr int kRefuted = 3;
constexpr int kBudget = 4;

int parse_int_token(const std::string& tok, const std::string& where) {
  int v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("bad integer token '" + tok + "' in " + where);
  return v;
}

double parse_double_token(const std::string& tok, const std::string& where) {
  double v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("bad number token '" + tok + "' in " + where);
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

// "4..11", "7", or a comma list mixing both.
std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split(text, ',')) {
    const size_t dots = piece.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int_token(piece, "--n"));
      continue;
    }
    const int a = parse_int_token(piece.substr(0, dots), "--n");
    const int b = parse_int_token(piece.substr(dots + 2), "--n");
    if (a > b) throw std::invalid_argument("empty range '" + piece + "' in --n");
    for (int n = a; n <= b; ++n) out.push_back(n);
  }
  if (out.empty()) throw std::invalid_argument("--n selects no values");
  std::vector<int> dedup;
  for (int n : out)
    if (std::find(dedup.begin(), dedup.end(), n) == dedup.end()) dedup.push_back(n);
  return dedup;
}

std::vector<int> parse_seq(const std::string& text) {
  std::vector<int> out;
  for (const std::string& piece : split(text, ',')) {
    const int v = parse_int_token(piece, "--seq");
    if (v < 0) throw std::invalid_argument("bad token '" + piece + "' in --seq: negative value");
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_c_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& piece : split(text, ','))
    out.push_back(parse_double_token(piece, "--c-grid"));
  return out;
}

long long default_budget() {
  if (const char* env = std::getenv("SIGMA_BUDGET")) {
    const std::string text = env;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v < 1)
      throw std::invalid_argument("bad SIGMA_BUDGET value '" + text + "'");
    return v;
  }
  return kDefaultBudget;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = kEngineName;
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

RunManifest make_manifest(const std::vector<std::string>& args, long long budget,
                          const std::string& exponent_spec) {
  RunManifest m;
  m.command_line = join_args(args);
  m.engine = kEngineName;
  m.version = kEngineVersion;
  m.timestamp_utc = iso8601_utc_now();
  m.tie_tolerance = kTieTolerance;
  m.budget = budget;
  m.exponent_spec = exponent_spec;
  return m;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
}

void print_row(std::ostream& out, const ExtremalReport& r) {
  out << "theorem=" << (r.theorem.empty() ? "-" : r.theorem) << " n=" << r.domain.n
      << " f=" << r.exponent_desc << " (" << format_double(r.f) << ")"
      << " direction=" << direction_name(r.direction) << " verdict=" << verdict_name(r.verdict)
      << " optimum=" << format_double(r.optimum) << " optimizers=" << r.optimizers.size()
      << " margin=" << format_double(r.runner_up_margin) << " scanned=" << r.sequences_scanned;
  if (!r.note.empty()) out << " note=\"" << r.note << "\"";
  out << "\n";
}

std::string unique_exponent_descs(const std::vector<ExtremalReport>& rows) {
  std::string joined;
  std::vector<std::string> seen;
  for (const auto& r : rows) {
    if (std::find(seen.begin(), seen.end(), r.exponent_desc) != seen.end()) continue;
    seen.push_back(r.exponent_desc);
    if (!joined.empty()) joined += ',';
    joined += r.exponent_desc;
  }
  return joined;
}

// --------------------------------------------------------------------------
// compute
// --------------------------------------------------------------------------

int cmd_compute(const std::string& seq_text, const std::string& f_text, std::ostream& out) {
  const DegreeSequence seq(parse_seq(seq_text));
  const ExponentSpec spec = ExponentSpec::parse(f_text);
  const double f = spec.resolve(seq.n());
  const DifferenceProfile profile = difference_profile(seq);

  const bool in_degree_range = seq.max_value() <= seq.n() - 1;
  json j{{"n", seq.n()},
         {"sequence", seq.vec()},
         {"exponent", json{{"spec", spec.to_string()}, {"resolved", f}}},
         {"sigma_t_f", sigma_t_f(profile, f).value},
         {"irr_t", irr_t(seq)},
         {"sigma_t_classic", sigma_t_classic(seq)},
         {"first_zagreb", first_zagreb(seq)},
         {"difference_profile", profile.counts},
         {"is_graphical", in_degree_range && is_graphical(seq)},
         {"is_tree_sequence", is_tree_sequence(seq)},
         {"has_connected_realization", has_connected_realization(seq)}};
  out << j.dump(2) << "\n";
  return kOk;
}

// --------------------------------------------------------------------------
// verify
// --------------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string n_text;
  std::string out_dir = "reports";
  std::string c_grid_text;
  bool min_degree_one = false;
  bool graphical_only = false;
  int shards = 1;
  int jobs = 1;
  long long budget = 0;  // 0 = default/env
};

int cmd_verify_relaxation(const VerifyArgs& va, const std::vector<int>& ns,
                          const std::vector<std::string>& args, long long budget,
                          std::ostream& out) {
  const fs::path dir(va.out_dir);
  fs::create_directories(dir);
  RunManifest manifest = make_manifest(args, budget, "1/n");
  struct Row {
    ChemRelaxationRecord rec;
    Verdict verdict;
    std::string note;
  };
  std::vector<Row> rows;
  for (int n : ns) {
    const ChemRelaxationRecord rec = chem_relaxation(n);
    const double tol = 1e-9;
    const bool sym14 = std::fabs(rec.x1 - rec.x4) <= tol * std::max(1.0, std::fabs(rec.x1));
    const bool sym23 = std::fabs(rec.x2 - rec.x3) <= tol * std::max(1.0, std::fabs(rec.x2));
    const double sum = rec.x1 + rec.x2 + rec.x3 + rec.x4;
    const bool sum_ok = std::fabs(sum - n) <= tol * std::max(1.0, static_cast<double>(n));
    const Verdict verdict = (sym14 && sym23 && sum_ok) ? Verdict::Confirmed : Verdict::Refuted;
    const std::string note = "gap_to_quarter=" + format_double(rec.gap_to_quarter) +
                             " limit=(1/8)ln3=" + format_double(std::log(3.0) / 8.0);
    rows.push_back({rec, verdict, note});
    manifest.rows.push_back({theorem_name(TheoremId::ChemRelaxation), n, 1.0 / n, 1,
                             verdict_name(verdict)});
  }
  std::string csv = csv_header();
  bool any_refuted = false;
  for (const auto& row : rows) {
    const fs::path file =
        dir / (std::string(theorem_name(TheoremId::ChemRelaxation)) + "_n" +
               std::to_string(row.rec.n) + ".json");
    write_text_file(file, relaxation_file_json(manifest, row.rec, row.verdict, row.note).dump(2));
    csv += std::to_string(row.rec.n) + "," + format_double(1.0 / row.rec.n) + "," +
           format_double(row.rec.objective) + ",0,0," + verdict_name(row.verdict) + "\r\n";
    out << "theorem=chem-relaxation n=" << row.rec.n << " verdict=" << verdict_name(row.verdict)
        << " x=(" << format_double(row.rec.x1) << "," << format_double(row.rec.x2) << ","
        << format_double(row.rec.x3) << "," << format_double(row.rec.x4) << ") " << row.note
        << "\n";
    any_refuted = any_refuted || row.verdict == Verdict::Refuted;
  }
  const fs::path summary =
      dir / (std::string(theorem_name(TheoremId::ChemRelaxation)) + "_summary.csv");
  write_text_file(summary, csv);
  out << "summary: " << summary.string() << "\n";
  return any_refuted ? kRefuted : kOk;
}

int cmd_verify(const VerifyArgs& va, const std::vector<std::string>& args, std::ostream& out) {
  const TheoremId id = theorem_from_string(va.theorem);
  const std::vector<int> ns = parse_n_list(va.n_text);
  const long long budget = va.budget > 0 ? va.budget : default_budget();
  if (id == TheoremId::ChemRelaxation) return cmd_verify_relaxation(va, ns, args, budget, out);

  VerifyOptions opts;
  opts.shards = va.shards;
  opts.jobs = va.jobs;
  opts.budget = budget;
  opts.min_degree_one = va.min_degree_one;
  opts.graphical_only = va.graphical_only;
  if (!va.c_grid_text.empty()) opts.c_grid = parse_c_grid(va.c_grid_text);

  std::vector<ExtremalReport> rows;
  for (int n : ns) {
    auto batch = verify(id, n, n, opts);
    rows.insert(rows.end(), std::make_move_iterator(batch.begin()),
                std::make_move_iterator(batch.end()));
  }

  RunManifest manifest = make_manifest(args, budget, unique_exponent_descs(rows));
  for (const auto& r : rows)
    manifest.rows.push_back({r.theorem, r.domain.n, r.f, r.domain_size, verdict_name(r.verdict)});

  const fs::path dir(va.out_dir);
  fs::create_directories(dir);
  std::map<int, int> rows_per_n, row_index;
  for (const auto& r : rows) ++rows_per_n[r.domain.n];
  std::string csv = csv_header();
  bool any_refuted = false;
  for (const auto& r : rows) {
    const int k = row_index[r.domain.n]++;
    std::string name = va.theorem + "_n" + std::to_string(r.domain.n);
    if (rows_per_n[r.domain.n] > 1) name += "_r" + std::to_string(k);
    write_text_file(dir / (name + ".json"), report_file_json(manifest, r).dump(2));
    csv += csv_row(r);
    print_row(out, r);
    any_refuted = any_refuted || r.verdict == Verdict::Refuted;
  }
  const fs::path summary = dir / (va.theorem + "_summary.csv");
  write_text_file(summary, csv);
  out << "summary: " << summary.string() << "\n";
  return any_refuted ? kRefuted : kOk;
}

// --------------------------------------------------------------------------
// search
// --------------------------------------------------------------------------

struct SearchArgs {
  std::string domain;
  std::string n_text;
  std::string f_text;
  bool want_min = false;
  bool want_max = false;
  int lo = -1, hi = -1;
  int max_degree = -1;
  bool min_degree_one = false;
  bool graphical_only = false;
  std::string out_dir = "reports";
  int shards = 1;
  int jobs = 1;
  long long budget = 0;
};

Domain domain_for(const SearchArgs& sa, int n) {
  if (sa.domain == "int-seqs")
    return Domain::integer_sequences(n, sa.lo < 0 ? 1 : sa.lo, sa.hi < 0 ? n - 1 : sa.hi);
  if (sa.domain == "graphical")
    return Domain::graphical_sequences(n, sa.min_degree_one ? 1 : 0, sa.max_degree);
  if (sa.domain == "trees") return Domain::tree_sequences(n);
  if (sa.domain == "chemical") return Domain::chemical_sequences(n, sa.graphical_only);
  throw std::invalid_argument("unknown domain '" + sa.domain +
                              "' (expected int-seqs, graphical, trees or chemical)");
}

int cmd_search(const SearchArgs& sa, const std::vector<std::string>& args, std::ostream& out) {
  if (sa.want_min && sa.want_max)
    throw std::invalid_argument("--min and --max are mutually exclusive");
  const Direction dir = sa.want_min ? Direction::Min : Direction::Max;
  const std::vector<int> ns = parse_n_list(sa.n_text);
  const ExponentSpec spec = ExponentSpec::parse(sa.f_text);
  const long long budget = sa.budget > 0 ? sa.budget : default_budget();

  SearchOptions opts;
  opts.shards = sa.shards;
  opts.jobs = sa.jobs;
  opts.budget = budget;

  std::vector<ExtremalReport> rows;
  for (int n : ns) {
    ExtremalReport r = search_extremum(domain_for(sa, n), spec.resolve(n), dir, opts);
    r.exponent_desc = spec.to_string();
    rows.push_back(std::move(r));
  }

  RunManifest manifest = make_manifest(args, budget, spec.to_string());
  for (const auto& r : rows)
    manifest.rows.push_back({"", r.domain.n, r.f, r.domain_size, verdict_name(r.verdict)});

  const fs::path dirpath(sa.out_dir);
  fs::create_directories(dirpath);
  std::string csv = csv_header();
  for (const auto& r : rows) {
    const fs::path file =
        dirpath / ("search_" + sa.domain + "_n" + std::to_string(r.domain.n) + ".json");
    write_text_file(file, report_file_json(manifest, r).dump(2));
    csv += csv_row(r);
    print_row(out, r);
  }
  const fs::path summary = dirpath / "search_summary.csv";
  write_text_file(summary, csv);
  out << "summary: " << summary.string() << "\n";
  return kOk;
}

// --------------------------------------------------------------------------
// report
// --------------------------------------------------------------------------

int cmd_report(const std::vector<std::string>& files, const std::string& out_csv,
               std::ostream& out) {
  std::string csv = csv_header();
  for (const std::string& file : files) {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("cannot open report file '" + file + "'");
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument("invalid JSON in '" + file + "': " + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "extremal_report") {
      csv += csv_row(report_from_json(j.at("report")));
    } else if (type == "chem_relaxation") {
      const ChemRelaxationRecord rec = relaxation_from_json(j.at("report"));
      csv += std::to_string(rec.n) + "," + format_double(1.0 / rec.n) + "," +
             format_double(rec.objective) + ",0,0," +
             csv_escape(j.value("verdict", "confirmed")) + "\r\n";
    } else {
      throw std::invalid_argument("unrecognized report type in '" + file + "'");
    }
  }
  write_text_file(out_csv, csv);
  out << "wrote " << out_csv << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized total sigma-irregularity toolkit", kEngineName};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  // compute
  std::string seq_text, f_text;
  auto* compute = app.add_subcommand("compute", "compute indices of one sequence");
  compute->add_option("--seq", seq_text, "comma-separated values, e.g. 4,3,2,2,1")->required();
  compute->add_option("--f", f_text, "exponent: literal, 1/n or a named threshold")->required();

  // verify
  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "verify an extremal statement over a range of n");
  verify_cmd->add_option("--theorem", va.theorem, "one of: " + [] {
                            std::string s;
                            for (const auto& name : theorem_names()) {
                              if (!s.empty()) s += ", ";
                              s += name;
                            }
                            return s;
                          }())
      ->required();
  verify_cmd->add_option("--n", va.n_text, "range, e.g. 4..11 or 7 or 4,6,8")->required();
  verify_cmd->add_option("--out", va.out_dir, "output directory (default: reports)");
  verify_cmd->add_option("--c-grid", va.c_grid_text, "constants for problem2/chem-conjectures");
  verify_cmd->add_flag("--min-degree-1", va.min_degree_one,
                       "restrict graphical domains to min degree >= 1");
  verify_cmd->add_flag("--graphical-only", va.graphical_only,
                       "chemical domain without the connectivity requirement");
  verify_cmd->add_option("--shards", va.shards, "enumeration shards (default 1)");
  verify_cmd->add_option("--jobs", va.jobs, "worker threads (default 1)");
  verify_cmd->add_option("--budget", va.budget, "domain-size refusal threshold");

  // search
  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "exhaustive extremum search over a domain");
  search_cmd->add_option("--domain", sa.domain, "int-seqs, graphical, trees or chemical")
      ->required();
  search_cmd->add_option("--n", sa.n_text, "range, e.g. 12 or 5..14")->required();
  search_cmd->add_option("--f", sa.f_text, "exponent spec")->required();
  search_cmd->add_flag("--min", sa.want_min, "minimize");
  search_cmd->add_flag("--max", sa.want_max, "maximize (default)");
  search_cmd->add_option("--lo", sa.lo, "int-seqs lower value bound (default 1)");
  search_cmd->add_option("--hi", sa.hi, "int-seqs upper value bound (default n-1)");
  search_cmd->add_option("--max-degree", sa.max_degree, "graphical max degree (default n-1)");
  search_cmd->add_flag("--min-degree-1", sa.min_degree_one, "graphical min degree >= 1");
  search_cmd->add_flag("--graphical-only", sa.graphical_only,
                       "chemical domain without the connectivity requirement");
  search_cmd->add_option("--out", sa.out_dir, "output directory (default: reports)");
  search_cmd->add_option("--shards", sa.shards, "enumeration shards (default 1)");
  search_cmd->add_option("--jobs", sa.jobs, "worker threads (default 1)");
  search_cmd->add_option("--budget", sa.budget, "domain-size refusal threshold");

  // report
  std::vector<std::string> report_files;
  std::string report_out;
  auto* report_cmd = app.add_subcommand("report", "merge JSON reports into one CSV");
  report_cmd->add_option("--out", report_out, "output CSV path")->required();
  report_cmd->add_option("files", report_files, "input JSON report files")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back(kEngineName);
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kEngineVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(seq_text, f_text, out);
    if (verify_cmd->parsed()) return cmd_verify(va, args, out);
    if (search_cmd->parsed()) return cmd_search(sa, args, out);
    if (report_cmd->parsed()) return cmd_report(report_files, report_out, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (override with --budget or SIGMA_BUDGET)\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace sigmat::cli
