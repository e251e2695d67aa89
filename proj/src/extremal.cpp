#include "sigmat/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "sigmat/graphical.hpp"

namespace sigmat {

const char* direction_name(Direction d) { return d == Direction::Max ? "max" : "min"; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::TieDetected: return "tie-detected";
  }
  return "?";
}

BudgetExceeded::BudgetExceeded(const Domain& domain, long long candidates_, long long budget_)
    : std::runtime_error("search refused: " + domain.describe() + " has " +
                         std::to_string(candidates_) + " candidate sequences, budget is " +
                         std::to_string(budget_)),
      candidates(candidates_),
      budget(budget_) {}

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Tied {
  double value;
  std::vector<int> seq;
};

// Tracks the current optimum's tie class plus the best value outside it.
// All tie decisions use the shared compare_values policy, so repeated and
// re-sharded runs land on the same class.
class BestTracker {
 public:
  explicit BestTracker(Direction dir = Direction::Max) : dir_(dir) {}

  void offer(double v, std::span<const int> seq) {
    if (!any_) {
      any_ = true;
      best_ = v;
      tied_.push_back({v, std::vector<int>(seq.begin(), seq.end())});
      return;
    }
    const Ordering ord = compare_values({v}, {best_});
    if (ord == Ordering::Tie) {
      tied_.push_back({v, std::vector<int>(seq.begin(), seq.end())});
      if (better(v, best_)) {
        best_ = v;
        refilter();
      }
    } else if (better(v, best_)) {
      std::vector<Tied> displaced = std::move(tied_);
      tied_.clear();
      tied_.push_back({v, std::vector<int>(seq.begin(), seq.end())});
      best_ = v;
      for (auto& t : displaced) {
        if (compare_values({t.value}, {best_}) == Ordering::Tie)
          tied_.push_back(std::move(t));
        else
          fold_runner(t.value);
      }
    } else {
      fold_runner(v);
    }
  }

  void absorb(BestTracker&& other) {
    for (auto& t : other.tied_) offer(t.value, t.seq);
    if (other.has_runner_) fold_runner(other.runner_);
  }

  bool has_result() const { return any_; }
  double best() const { return best_; }
  const std::vector<Tied>& tied() const { return tied_; }
  bool has_runner() const { return has_runner_; }
  double runner() const { return runner_; }

 private:
  bool better(double a, double b) const { return dir_ == Direction::Max ? a > b : a < b; }

  void fold_runner(double v) {
    if (!has_runner_ || better(v, runner_)) {
      runner_ = v;
      has_runner_ = true;
    }
  }

  void refilter() {
    std::vector<Tied> keep;
    keep.reserve(tied_.size());
    for (auto& t : tied_) {
      if (compare_values({t.value}, {best_}) == Ordering::Tie)
        keep.push_back(std::move(t));
      else
        fold_runner(t.value);
    }
    tied_ = std::move(keep);
  }

  Direction dir_;
  bool any_ = false;
  double best_ = 0.0;
  std::vector<Tied> tied_;
  bool has_runner_ = false;
  double runner_ = 0.0;
};

struct ShardScan {
  BestTracker tracker;
  long long scanned = 0;
  long long excluded = 0;
};

bool matches_any(std::span<const int> v, const std::vector<std::vector<int>>& list) {
  for (const auto& e : list) {
    if (e.size() == v.size() && std::equal(e.begin(), e.end(), v.begin())) return true;
  }
  return false;
}

ShardScan scan_shard(const DomainShard& piece, const PowerTable& table, Direction dir,
                     const std::vector<std::vector<int>>& exclude) {
  ShardScan out{BestTracker(dir)};
  std::vector<long long> counts(static_cast<size_t>(std::max(piece.domain.n - 1, 1)), 0);
  for_each_sequence(piece, [&](std::span<const int> v) {
    if (!exclude.empty() && matches_any(v, exclude)) {
      ++out.excluded;
      return true;
    }
    std::fill(counts.begin(), counts.end(), 0);
    accumulate_difference_counts(v, counts);
    out.tracker.offer(table.value(counts), v);
    ++out.scanned;
    return true;
  });
  return out;
}

bool seq_lex_greater(const DegreeSequence& a, const DegreeSequence& b) {
  return a.vec() > b.vec();
}

std::vector<DegreeSequence> sorted_family(std::vector<DegreeSequence> seqs) {
  std::sort(seqs.begin(), seqs.end(), seq_lex_greater);
  return seqs;
}

bool same_family(const std::vector<DegreeSequence>& a, const std::vector<DegreeSequence>& b) {
  return sorted_family(a) == sorted_family(b);
}

bool family_contains(const std::vector<DegreeSequence>& family, const DegreeSequence& s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

}  // namespace

bool same_outcome(const ExtremalReport& a, const ExtremalReport& b) {
  ExtremalReport x = a, y = b;
  x.wall_time_ms = y.wall_time_ms = 0.0;
  return x == y;
}

ExtremalReport search_extremum(const Domain& domain, double f, Direction direction,
                               const SearchOptions& opts) {
  domain.validate();
  if (!(f > 0.0)) throw std::invalid_argument("exponent f must be positive");
  const long long candidates = candidate_count(domain);
  if (candidates > opts.budget) throw BudgetExceeded(domain, candidates, opts.budget);

  const auto t0 = std::chrono::steady_clock::now();
  const PowerTable table(f, std::max(domain.n - 2, 1));
  const auto pieces = shard(domain, std::max(1, opts.shards));
  std::vector<ShardScan> partial(pieces.size());

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || pieces.size() == 1) {
    for (size_t i = 0; i < pieces.size(); ++i)
      partial[i] = scan_shard(pieces[i], table, direction, opts.exclude);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(pieces.size());
    auto worker = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= pieces.size()) return;
        try {
          partial[i] = scan_shard(pieces[i], table, direction, opts.exclude);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const size_t pool_size = std::min<size_t>(static_cast<size_t>(jobs), pieces.size());
    pool.reserve(pool_size);
    for (size_t i = 0; i < pool_size; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // deterministic merge in shard order
  BestTracker tracker(direction);
  long long scanned = 0, excluded = 0;
  for (auto& p : partial) {
    scanned += p.scanned;
    excluded += p.excluded;
    tracker.absorb(std::move(p.tracker));
  }
  if (!tracker.has_result())
    throw std::invalid_argument("search domain is empty: " + domain.describe());

  ExtremalReport r;
  r.domain = domain;
  r.f = f;
  r.direction = direction;
  r.optimum = tracker.best();
  for (const auto& t : tracker.tied())
    r.optimizers.emplace_back(std::vector<int>(t.seq));
  std::sort(r.optimizers.begin(), r.optimizers.end(), seq_lex_greater);
  r.runner_up_margin = tracker.has_runner() ? std::fabs(tracker.best() - tracker.runner())
                                            : std::numeric_limits<double>::infinity();
  r.domain_size = scanned + excluded;
  r.sequences_scanned = scanned;
  r.predicate = "exploration";
  r.verdict = r.optimizers.size() > 1 ? Verdict::TieDetected : Verdict::Confirmed;
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------
// Expected-set builders
// ---------------------------------------------------------------------------

DegreeSequence path_degrees(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<int> v(static_cast<size_t>(n), 2);
  v[static_cast<size_t>(n - 1)] = 1;
  v[static_cast<size_t>(n - 2)] = 1;
  return DegreeSequence(std::move(v));
}

DegreeSequence star_degrees(int n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<int> v(static_cast<size_t>(n), 1);
  v[0] = n - 1;
  return DegreeSequence(std::move(v));
}

DegreeSequence y_graph_degrees(int n) {
  if (n < 5) throw std::invalid_argument("Y_n needs n >= 5 (it degenerates to the star at n = 4)");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  v.push_back(3);
  for (int i = 0; i < n - 4; ++i) v.push_back(2);
  for (int i = 0; i < 3; ++i) v.push_back(1);
  return DegreeSequence(std::move(v));
}

std::vector<DegreeSequence> covering_multisets(int n) {
  if (n < 4) throw std::invalid_argument("covering multisets need n >= 4");
  std::vector<DegreeSequence> out;
  for (int r = 1; r <= n - 1; ++r) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    for (int d = 1; d <= n - 1; ++d) v.push_back(d);
    v.push_back(r);
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<DegreeSequence> chem_max_expected(int n) {
  if (n < 7) throw std::invalid_argument("chemical maximizer cases need n >= 7");
  auto build = [](int a1, int a2, int a3, int a4) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(a1 + a2 + a3 + a4));
    for (int i = 0; i < a4; ++i) v.push_back(4);
    for (int i = 0; i < a3; ++i) v.push_back(3);
    for (int i = 0; i < a2; ++i) v.push_back(2);
    for (int i = 0; i < a1; ++i) v.push_back(1);
    return DegreeSequence(std::move(v));
  };
  switch (n % 4) {
    case 3: {  // n = 4k - 1
      const int k = (n + 1) / 4;
      return {build(k, k - 1, k, k)};
    }
    case 0: {  // n = 4k
      const int k = n / 4;
      return {build(k, k, k, k)};
    }
    case 1: {  // n = 4k + 1
      const int k = (n - 1) / 4;
      return {build(k, k, k, k + 1)};
    }
    case 2: {  // n = 4k + 2
      const int k = (n - 2) / 4;
      return {build(k, k + 1, k, k + 1), build(k + 1, k, k + 1, k)};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<DegreeSequence> antiregular_expected(int n, bool min_degree_one) {
  std::vector<DegreeSequence> out;
  out.push_back(antiregular_sequence(n, true));
  if (!min_degree_one) out.push_back(antiregular_sequence(n, false));
  return out;
}

// ---------------------------------------------------------------------------
// Verification harness
// ---------------------------------------------------------------------------

namespace {

struct TheoremNameEntry {
  TheoremId id;
  const char* name;
};

constexpr TheoremNameEntry kTheoremNames[] = {
    {TheoremId::AntiregularGraphMax, "antiregular-max"},
    {TheoremId::SequenceCorollary, "seq-corollary"},
    {TheoremId::SequenceStrong, "seq-strong"},
    {TheoremId::TreeMin, "tree-min"},
    {TheoremId::TreeSecondMin, "tree-second-min"},
    {TheoremId::ChemMax, "chem-max"},
    {TheoremId::Problem1, "problem1"},
    {TheoremId::Problem2, "problem2"},
    {TheoremId::TreeMaxProblem, "tree-max-problem"},
    {TheoremId::ChemConjectures, "chem-conjectures"},
    {TheoremId::YGraph, "y-graph"},
    {TheoremId::ChemRelaxation, "chem-relaxation"},
};

std::string family_to_string(const std::vector<DegreeSequence>& family) {
  std::string s;
  for (size_t i = 0; i < family.size(); ++i) {
    if (i) s += " ";
    s += "(" + family[i].to_string() + ")";
  }
  return s;
}

// Exact-set predicate: the optimizer class must equal the predicted family.
void judge_exact_set(ExtremalReport& r, std::vector<DegreeSequence> expected) {
  r.predicate = "exact-set";
  r.asserted = true;
  r.expected = sorted_family(std::move(expected));
  if (same_family(r.optimizers, r.expected)) {
    r.verdict = Verdict::Confirmed;
  } else {
    r.verdict = Verdict::Refuted;
    std::string extra, missing;
    for (const auto& o : r.optimizers)
      if (!family_contains(r.expected, o)) extra += " (" + o.to_string() + ")";
    for (const auto& e : r.expected)
      if (!family_contains(r.optimizers, e)) missing += " (" + e.to_string() + ")";
    if (!extra.empty()) r.note += "unexpected optimizers:" + extra + "; ";
    if (!missing.empty()) r.note += "predicted optimizers not attained:" + missing + "; ";
  }
}

// Containment predicate for the sequence statements: every maximizer must be
// a covering multiset (or a listed exceptional class), and the maximum must
// be attained by a covering multiset. A realized exceptional tie is reported
// as TieDetected, not as a refutation.
void judge_subset(ExtremalReport& r, std::vector<DegreeSequence> expected,
                  std::vector<DegreeSequence> exceptional) {
  r.predicate = "subset-of-expected";
  r.asserted = true;
  r.expected = sorted_family(std::move(expected));
  r.allowed_extras = sorted_family(std::move(exceptional));
  bool all_allowed = true;
  bool core_attained = false;
  bool exceptional_hit = false;
  std::string outside;
  for (const auto& o : r.optimizers) {
    const bool in_core = family_contains(r.expected, o);
    const bool in_extra = family_contains(r.allowed_extras, o);
    core_attained = core_attained || in_core;
    exceptional_hit = exceptional_hit || in_extra;
    if (!in_core && !in_extra) {
      all_allowed = false;
      outside += " (" + o.to_string() + ")";
    }
  }
  if (!all_allowed) {
    r.verdict = Verdict::Refuted;
    r.note += "optimizers outside the predicted family:" + outside + "; ";
  } else if (!core_attained) {
    r.verdict = Verdict::Refuted;
    r.note += "no predicted multiset attains the optimum; ";
  } else if (exceptional_hit) {
    r.verdict = Verdict::TieDetected;
    r.note += "exceptional tie attained: " + family_to_string(r.allowed_extras) + "; ";
  } else {
    r.verdict = Verdict::Confirmed;
  }
}

ExtremalReport run_search_row(TheoremId id, const Domain& domain, double f,
                              const std::string& exponent_desc, Direction dir,
                              const VerifyOptions& opts) {
  ExtremalReport r = search_extremum(domain, f, dir, opts);
  r.theorem = theorem_name(id);
  r.exponent_desc = exponent_desc;
  return r;
}

void require_range(TheoremId id, int n_lo, int n_hi, int min_n) {
  if (n_lo > n_hi) throw std::invalid_argument("empty n range");
  if (n_lo < min_n)
    throw std::invalid_argument(std::string(theorem_name(id)) + " needs n >= " +
                                std::to_string(min_n) + ", got n = " + std::to_string(n_lo));
}

}  // namespace

TheoremId theorem_from_string(const std::string& name) {
  for (const auto& e : kTheoremNames)
    if (name == e.name) return e.id;
  throw std::invalid_argument("unknown theorem id '" + name + "'");
}

const char* theorem_name(TheoremId id) {
  for (const auto& e : kTheoremNames)
    if (id == e.id) return e.name;
  return "?";
}

std::vector<std::string> theorem_names() {
  std::vector<std::string> out;
  for (const auto& e : kTheoremNames) out.emplace_back(e.name);
  return out;
}

ExtremalReport y_graph_check(int n) {
  const DegreeSequence y = y_graph_degrees(n);
  const double f = 1.0 / static_cast<double>(n);
  const double via_profile = sigma_t_f(difference_profile(y), f).value;
  const double closed_form = (4.0 * n - 16.0) + 3.0 * std::pow(2.0, f);
  const double star = (n - 1.0) * std::pow(static_cast<double>(n - 2), f);
  const double rel_err =
      std::fabs(via_profile - closed_form) / std::max(1.0, std::fabs(closed_form));
  const bool form_ok = rel_err <= 1e-12;
  const bool below_star = compare_values({via_profile}, {star}) == Ordering::Less;

  ExtremalReport r;
  r.domain = Domain::tree_sequences(n);
  r.theorem = theorem_name(TheoremId::YGraph);
  r.exponent_desc = "1/n";
  r.f = f;
  r.direction = Direction::Min;
  r.optimum = via_profile;
  r.optimizers = {y};
  r.runner_up_margin = std::fabs(star - via_profile);
  r.domain_size = 1;
  r.sequences_scanned = 1;
  r.predicate = "closed-form-and-inequality";
  r.asserted = true;
  r.verdict = (form_ok && below_star) ? Verdict::Confirmed : Verdict::Refuted;
  r.note = "sigma_f(Y_n)=" + fmt_g(via_profile) + " closed_form=" + fmt_g(closed_form) +
           " rel_err=" + fmt_g(rel_err) + " sigma_f(S_n)=" + fmt_g(star) +
           (below_star ? "; Y_n < S_n holds" : "; Y_n < S_n FAILS (Y_n is above the star)");
  return r;
}

ChemRelaxationRecord chem_relaxation(int n) {
  if (n < 4) throw std::invalid_argument("chem_relaxation needs n >= 4");
  const double f = 1.0 / static_cast<double>(n);
  const double r2 = std::pow(2.0, f);
  const double r3 = std::pow(3.0, f);
  const double denom = 1.0 + 2.0 * r2 - r3;
  ChemRelaxationRecord rec;
  rec.n = n;
  rec.x1 = rec.x4 = (n / 2.0) * r2 / denom;
  rec.x2 = rec.x3 = (n / 2.0) * (1.0 + r2 - r3) / denom;
  rec.objective = chem_relaxation_objective(rec.x1, rec.x2, rec.x3, rec.x4, n);
  rec.gap_to_quarter = rec.x1 - n / 4.0;
  return rec;
}

double chem_relaxation_objective(double x1, double x2, double x3, double x4, int n) {
  const double f = 1.0 / static_cast<double>(n);
  return (x1 * x2 + x2 * x3 + x3 * x4) + (x1 * x3 + x2 * x4) * std::pow(2.0, f) +
         x1 * x4 * std::pow(3.0, f);
}

long long distinct_pair_exchange_check(const std::array<long long, 4>& a, int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3 || i == j)
    throw std::invalid_argument("exchange indices must be distinct and in [0,3]");
  if (a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)] < 2)
    throw std::invalid_argument("exchange needs a[i] - a[j] >= 2");
  auto distinct_pairs = [](const std::array<long long, 4>& m) {
    long long b = 0;
    for (int s = 0; s < 4; ++s)
      for (int t = s + 1; t < 4; ++t) b += m[static_cast<size_t>(s)] * m[static_cast<size_t>(t)];
    return b;
  };
  std::array<long long, 4> moved = a;
  --moved[static_cast<size_t>(i)];
  ++moved[static_cast<size_t>(j)];
  const long long gain = distinct_pairs(moved) - distinct_pairs(a);
  const long long predicted = a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)] - 1;
  if (gain != predicted)
    throw std::logic_error("exchange gain mismatch: recomputed " + std::to_string(gain) +
                           ", formula " + std::to_string(predicted));
  return gain;
}

std::vector<ExtremalReport> verify(TheoremId id, int n_lo, int n_hi, const VerifyOptions& opts) {
  std::vector<ExtremalReport> rows;
  switch (id) {
    case TheoremId::AntiregularGraphMax:
    case TheoremId::Problem1: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::graphical_sequences(n, opts.min_degree_one ? 1 : 0);
        const bool reciprocal = id == TheoremId::Problem1;
        const double f = reciprocal ? 1.0 / n : binomial_threshold(n);
        ExtremalReport r = run_search_row(id, domain, f,
                                          reciprocal ? "1/n" : "bin-threshold",
                                          Direction::Max, opts);
        judge_exact_set(r, antiregular_expected(n, opts.min_degree_one));
        rows.push_back(std::move(r));
      }
      break;
    }
    case TheoremId::Problem2: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::graphical_sequences(n, opts.min_degree_one ? 1 : 0);
        for (double c : opts.c_grid) {
          const ExponentSpec spec = ExponentSpec::constant(c);  // validates (0,1)
          ExtremalReport r =
              run_search_row(id, domain, spec.resolve(n), spec.to_string(), Direction::Max, opts);
          judge_exact_set(r, antiregular_expected(n, opts.min_degree_one));
          rows.push_back(std::move(r));
        }
      }
      break;
    }
    case TheoremId::SequenceCorollary: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::integer_sequences(n, 1, n - 1);
        const double t = binomial_threshold(n);
        // the exact corollary exponent, then a sample inside the open regime
        for (auto [scale, tag] :
             {std::pair<double, const char*>{1.0, "bin-threshold"},
              std::pair<double, const char*>{0.999, "bin-threshold*0.999"}}) {
          ExtremalReport r = run_search_row(id, domain, t * scale, tag, Direction::Max, opts);
          judge_subset(r, covering_multisets(n), {});
          rows.push_back(std::move(r));
        }
      }
      break;
    }
    case TheoremId::SequenceStrong: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::integer_sequences(n, 1, n - 1);
        ExtremalReport r =
            run_search_row(id, domain, sequence_threshold(n), "seq-threshold", Direction::Max, opts);
        std::vector<DegreeSequence> exceptional;
        if (n == 4) exceptional.emplace_back(std::vector<int>{3, 3, 1, 1});
        judge_subset(r, covering_multisets(n), std::move(exceptional));
        rows.push_back(std::move(r));
      }
      break;
    }
    case TheoremId::TreeMin: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::tree_sequences(n);
        const double t = tree_threshold(n);
        struct Regime {
          double f;
          const char* tag;
          int expect;  // bit 1 = path, bit 2 = star
        };
        const Regime regimes[] = {{t * 1.001, "tree-threshold*1.001", 1},
                                  {t, "tree-threshold", 3},
                                  {t * 0.999, "tree-threshold*0.999", 2}};
        for (const auto& regime : regimes) {
          ExtremalReport r =
              run_search_row(id, domain, regime.f, regime.tag, Direction::Min, opts);
          std::vector<DegreeSequence> expected;
          if (regime.expect & 1) expected.push_back(path_degrees(n));
          if (regime.expect & 2) expected.push_back(star_degrees(n));
          judge_exact_set(r, std::move(expected));
          rows.push_back(std::move(r));
        }
        // the statement leaves f unbounded above in the path regime; sample
        // f = 1 and f = 2 there and report without asserting
        for (double f : {1.0, 2.0}) {
          ExtremalReport r = run_search_row(id, domain, f, f == 1.0 ? "1" : "2", Direction::Min, opts);
          r.asserted = false;
          r.note = "upper-regime sample, reported without assertion; ";
          rows.push_back(std::move(r));
        }
      }
      break;
    }
    case TheoremId::TreeSecondMin: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::tree_sequences(n);
        VerifyOptions local = opts;
        local.exclude.push_back(star_degrees(n).vec());
        ExtremalReport r = run_search_row(id, domain, tree_threshold(n) * 0.999,
                                          "tree-threshold*0.999", Direction::Min, local);
        judge_exact_set(r, {path_degrees(n)});
        r.note += "star value class removed from the scan; ";
        rows.push_back(std::move(r));
      }
      break;
    }
    case TheoremId::ChemMax: {
      require_range(id, n_lo, n_hi, 7);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::chemical_sequences(n, opts.graphical_only);
        ExtremalReport r =
            run_search_row(id, domain, chemical_threshold(n), "chem-threshold", Direction::Max, opts);
        judge_exact_set(r, chem_max_expected(n));
        rows.push_back(std::move(r));
      }
      break;
    }
    case TheoremId::ChemConjectures: {
      require_range(id, n_lo, n_hi, 7);
      for (int n = n_lo; n <= n_hi; ++n) {
        const Domain domain = Domain::chemical_sequences(n, opts.graphical_only);
        std::vector<std::pair<double, std::string>> exponents;
        exponents.emplace_back(1.0 / n, "1/n");
        for (double c : opts.c_grid)
          exponents.emplace_back(ExponentSpec::constant(c).resolve(n),
                                 ExponentSpec::constant(c).to_string());
        for (const auto& [f, tag] : exponents) {
          ExtremalReport r = run_search_row(id, domain, f, tag, Direction::Max, opts);
          judge_exact_set(r, chem_max_expected(n));
          rows.push_back(std::move(r));
        }
      }
      break;
    }
    case TheoremId::TreeMaxProblem: {
      require_range(id, n_lo, n_hi, 4);
      for (int n = n_lo; n <= n_hi; ++n) {
        ExtremalReport r = run_search_row(id, Domain::tree_sequences(n), 1.0 / n, "1/n",
                                          Direction::Max, opts);
        r.note = "exploration: open problem, optimizer set reported per n; ";
        rows.push_back(std::move(r));
      }
      break;
    }
    case TheoremId::YGraph: {
      require_range(id, n_lo, n_hi, 5);
      for (int n = n_lo; n <= n_hi; ++n) rows.push_back(y_graph_check(n));
      break;
    }
    case TheoremId::ChemRelaxation:
      throw std::invalid_argument(
          "chem-relaxation has no search rows; call chem_relaxation(n) directly");
  }
  return rows;
}

}  // namespace sigmat
