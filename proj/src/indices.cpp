#include "sigmat/indices.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sigmat {

long long DifferenceProfile::total_pairs() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

void accumulate_difference_counts(std::span<const int> values, std::span<long long> counts) {
  const size_t n = values.size();
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j < n && values[j] == values[i]) ++j;
    const long long mult_i = static_cast<long long>(j - i);
    counts[0] += mult_i * (mult_i - 1) / 2;
    // pairs against every later (strictly smaller) run
    size_t k = j;
    while (k < n) {
      size_t l = k;
      while (l < n && values[l] == values[k]) ++l;
      counts[values[i] - values[k]] += mult_i * static_cast<long long>(l - k);
      k = l;
    }
    i = j;
  }
}

DifferenceProfile difference_profile(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("difference_profile: empty sequence");
  const int n = static_cast<int>(values.size());
  DifferenceProfile p;
  p.n = n;
  if (n == 1) return p;
  const int max_diff = values.front() - values.back();
  p.counts.assign(static_cast<size_t>(std::max(n - 1, max_diff + 1)), 0);
  accumulate_difference_counts(values, p.counts);
  return p;
}

DifferenceProfile difference_profile(const DegreeSequence& seq) {
  return difference_profile(seq.values());
}

Ordering compare_values(IndexValue a, IndexValue b, double tol) {
  const double scale = std::max({1.0, std::fabs(a.value), std::fabs(b.value)});
  if (std::fabs(a.value - b.value) <= tol * scale) return Ordering::Tie;
  return a.value < b.value ? Ordering::Less : Ordering::Greater;
}

PowerTable::PowerTable(double f, int max_delta) : f_(f) {
  if (!(f > 0.0)) throw std::invalid_argument("exponent f must be positive");
  if (f == 1.0) exact_exponent_ = 1;
  else if (f == 2.0) exact_exponent_ = 2;
  pow_.assign(static_cast<size_t>(std::max(max_delta, 1)) + 1, 0.0);
  for (size_t d = 1; d < pow_.size(); ++d)
    pow_[d] = std::pow(static_cast<double>(d), f);
}

double PowerTable::value(std::span<const long long> counts) const {
  if (exact_exponent_ != 0) {
    long long acc = 0;
    for (size_t d = 1; d < counts.size(); ++d) {
      const long long dd = static_cast<long long>(d);
      acc += counts[d] * (exact_exponent_ == 1 ? dd : dd * dd);
    }
    return static_cast<double>(acc);
  }
  double acc = 0.0;
  for (size_t d = 1; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    const double p = d < pow_.size() ? pow_[d] : std::pow(static_cast<double>(d), f_);
    acc += static_cast<double>(counts[d]) * p;
  }
  return acc;
}

IndexValue sigma_t_f(const DifferenceProfile& profile, double f) {
  PowerTable table(f, static_cast<int>(profile.counts.size()) - 1);
  return IndexValue{table.value(profile.counts)};
}

long long sigma_t_classic(const DegreeSequence& seq) {
  const DifferenceProfile p = difference_profile(seq);
  long long acc = 0;
  for (size_t d = 1; d < p.counts.size(); ++d)
    acc += p.counts[d] * static_cast<long long>(d) * static_cast<long long>(d);
  return acc;
}

long long first_zagreb(const DegreeSequence& seq) {
  long long acc = 0;
  for (int v : seq.values()) acc += static_cast<long long>(v) * v;
  return acc;
}

long long irr_t(const DegreeSequence& seq) {
  const DifferenceProfile p = difference_profile(seq);
  long long acc = 0;
  for (size_t d = 1; d < p.counts.size(); ++d)
    acc += p.counts[d] * static_cast<long long>(d);
  return acc;
}

}  // namespace sigmat
