#pragma once

#include <span>
#include <vector>

#include "sigmat/degree_sequence.hpp"

namespace sigmat {

// counts[d] = number of unordered position pairs {i,j} whose values differ
// by exactly d. This is the sufficient statistic for every pairwise index:
// sigma_t^f = sum_d counts[d] * d^f.
//
// Sized max(n-1, max_diff+1): for graph degree sequences and the in-scope
// search domains max_diff <= n-2, but arbitrary integer input stays
// representable.
struct DifferenceProfile {
  int n = 0;
  std::vector<long long> counts;

  long long total_pairs() const;

  friend bool operator==(const DifferenceProfile&, const DifferenceProfile&) = default;
};

// Adds the pair counts of a non-increasing sequence into `counts`
// (which must be zeroed and sized > max difference). O(D^2) in the number
// of distinct values. Shared by DifferenceProfile and the search hot path.
void accumulate_difference_counts(std::span<const int> sorted_non_increasing,
                                  std::span<long long> counts);

DifferenceProfile difference_profile(std::span<const int> sorted_non_increasing);
DifferenceProfile difference_profile(const DegreeSequence& seq);

// Tie policy shared by every comparison and search in the project:
// values within 1e-9 relative of each other are one value class.
inline constexpr double kTieTolerance = 1e-9;

struct IndexValue {
  double value = 0.0;
};

enum class Ordering { Less, Tie, Greater };

Ordering compare_values(IndexValue a, IndexValue b, double tol = kTieTolerance);

// sigma_t^f over a difference profile. d=0 pairs contribute nothing,
// d=1 pairs contribute counts[1] for every f. Rejects f <= 0.
IndexValue sigma_t_f(const DifferenceProfile& profile, double f);

// Exact integer specializations (f = 2 and f = 1) plus the first Zagreb index.
long long sigma_t_classic(const DegreeSequence& seq);
long long first_zagreb(const DegreeSequence& seq);
long long irr_t(const DegreeSequence& seq);

// Precomputed d^f for one exponent, reused across a whole search.
// f == 1 and f == 2 take an exact integer path and bypass floating point
// accumulation entirely.
class PowerTable {
 public:
  PowerTable(double f, int max_delta);

  double f() const { return f_; }
  bool exact() const { return exact_exponent_ != 0; }

  // sum_{d>=1} counts[d] * d^f
  double value(std::span<const long long> counts) const;

 private:
  double f_ = 0.0;
  int exact_exponent_ = 0;  // 0 = generic, otherwise 1 or 2
  std::vector<double> pow_;
};

}  // namespace sigmat
