#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigmat/degree_sequence.hpp"
#include "sigmat/enumerate.hpp"
#include "sigmat/exponent.hpp"
#include "sigmat/indices.hpp"

namespace sigmat {

enum class Direction { Max, Min };
enum class Verdict { Confirmed, Refuted, TieDetected };

const char* direction_name(Direction d);
const char* verdict_name(Verdict v);

inline constexpr long long kDefaultBudget = 100'000'000;

// Thrown instead of ever running a partial scan.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const Domain& domain, long long candidates, long long budget);
  long long candidates;
  long long budget;
};

struct SearchOptions {
  int shards = 1;
  int jobs = 1;
  long long budget = kDefaultBudget;
  // Multisets (sorted non-increasing) skipped during the scan; used by the
  // second-minimum checks to remove a value class.
  std::vector<std::vector<int>> exclude;
};

// Everything a search or verification row reports. `optimizers` holds every
// sequence within the tie band of the optimum; `runner_up_margin` is the gap
// to the best value outside that band (+inf when the domain has a single
// value class).
struct ExtremalReport {
  Domain domain;
  std::string exponent_desc;  // e.g. "tree-threshold*1.001"
  double f = 0.0;
  Direction direction = Direction::Max;

  double optimum = 0.0;
  std::vector<DegreeSequence> optimizers;  // sorted lexicographically decreasing
  double runner_up_margin = 0.0;
  long long domain_size = 0;
  long long sequences_scanned = 0;
  double wall_time_ms = 0.0;

  // Verification metadata. For plain searches predicate is "exploration"
  // and `expected` stays empty.
  std::string theorem;
  std::string predicate;
  bool asserted = false;
  std::vector<DegreeSequence> expected;
  std::vector<DegreeSequence> allowed_extras;  // exceptional tie classes
  Verdict verdict = Verdict::Confirmed;
  std::string note;

  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

// True when the two reports describe the same outcome (everything except
// wall time). Repeated and re-sharded runs must agree under this.
bool same_outcome(const ExtremalReport& a, const ExtremalReport& b);

// Exhaustively scans the domain (optionally sharded across a worker pool)
// and returns the full optimizer class under the tie policy. Refuses
// domains whose candidate count exceeds the budget.
ExtremalReport search_extremum(const Domain& domain, double f, Direction direction,
                               const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

enum class TheoremId {
  AntiregularGraphMax,  // antiregular multisets maximize at the binomial threshold
  SequenceCorollary,    // integer sequences, exact corollary exponent
  SequenceStrong,       // integer sequences at the sequence threshold, (1,1,3,3) tie
  TreeMin,              // path/star trichotomy around the tree threshold
  TreeSecondMin,        // path is second below the threshold once the star is removed
  ChemMax,              // chemical maximizer multiplicities, four residue cases
  Problem1,             // f = 1/n over graphical sequences
  Problem2,             // f = c constant grid over graphical sequences
  TreeMaxProblem,       // exploration: maximizing trees
  ChemConjectures,      // chemical maximizers at 1/n and constant c
  YGraph,               // closed form for Y_n and the Y_n-vs-star comparison
  ChemRelaxation,       // real relaxation of the chemical optimum
};

TheoremId theorem_from_string(const std::string& name);
const char* theorem_name(TheoremId id);
std::vector<std::string> theorem_names();

struct VerifyOptions : SearchOptions {
  std::vector<double> c_grid = {0.1, 0.25, 0.5, 0.75, 0.9};
  bool min_degree_one = false;   // restrict graphical domains to min degree >= 1
  bool graphical_only = false;   // chemical domain without the connectivity filter
};

// Runs the theorem's bound searches for each n in [n_lo, n_hi] and compares
// the optimizer set against the predicted set. Problems and conjectures get
// per-n verdicts; a refutation is a reportable finding, not an error.
std::vector<ExtremalReport> verify(TheoremId id, int n_lo, int n_hi,
                                   const VerifyOptions& opts = {});

// Expected-set builders (exposed for tests and reporting).
DegreeSequence path_degrees(int n);                       // n >= 2
DegreeSequence star_degrees(int n);                       // n >= 2
DegreeSequence y_graph_degrees(int n);                    // n >= 5
std::vector<DegreeSequence> covering_multisets(int n);    // {1..n-1} plus one repeat
std::vector<DegreeSequence> chem_max_expected(int n);     // n >= 7, the four residue cases
std::vector<DegreeSequence> antiregular_expected(int n, bool min_degree_one);

// Confirms sigma_t^f(Y_n) against the closed form (4n-16) + 3*2^f and
// evaluates the Y_n-vs-S_n comparison at f = 1/n. Verdict is Confirmed only
// if the closed form matches and Y_n lands strictly below the star.
ExtremalReport y_graph_check(int n);

// Closed-form real optimum of the degree-multiplicity relaxation
//   (x1x2 + x2x3 + x3x4) + (x1x3 + x2x4)*2^{1/n} + x1x4*3^{1/n},
//   x1 + x2 + x3 + x4 = n.
struct ChemRelaxationRecord {
  int n = 0;
  double x1 = 0, x2 = 0, x3 = 0, x4 = 0;
  double objective = 0;
  double gap_to_quarter = 0;  // x1 - n/4

  friend bool operator==(const ChemRelaxationRecord&, const ChemRelaxationRecord&) = default;
};

ChemRelaxationRecord chem_relaxation(int n);  // n >= 4
double chem_relaxation_objective(double x1, double x2, double x3, double x4, int n);

// Exact gain in distinct-degree pairs from moving one vertex from
// multiplicity i to multiplicity j (0-based indices into a). Requires
// a[i] - a[j] >= 2; the result equals a[i] - a[j] - 1 and is also
// recomputed from scratch as a cross-check.
long long distinct_pair_exchange_check(const std::array<long long, 4>& a, int i, int j);

}  // namespace sigmat
