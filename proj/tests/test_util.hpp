// Shared independent oracles for the test suites. Everything here is
// deliberately naive (double loops, bitmask graph enumeration) and never
// calls the code paths it is used to check.
#pragma once

#include <cmath>
#include <vector>

#include "sigmat/small_graph.hpp"

namespace testutil {

// sigma_t^f by the defining double loop over all position pairs.
inline double naive_sigma_f(const std::vector<int>& v, double f) {
  double acc = 0.0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      const int d = std::abs(v[i] - v[j]);
      if (d > 0) acc += std::pow(static_cast<double>(d), f);
    }
  return acc;
}

inline long long naive_irr_t(const std::vector<int>& v) {
  long long acc = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) acc += std::abs(v[i] - v[j]);
  return acc;
}

inline std::vector<long long> naive_profile(const std::vector<int>& v) {
  std::vector<long long> counts(v.size() < 2 ? 0 : v.size() - 1, 0);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      const size_t d = static_cast<size_t>(std::abs(v[i] - v[j]));
      if (d >= counts.size()) counts.resize(d + 1, 0);
      ++counts[d];
    }
  return counts;
}

// All non-increasing tuples of length n over [lo, hi], lexicographically
// decreasing; independent of the library enumerator.
inline void all_nonincreasing_rec(int n, int lo, int pos, int prev, std::vector<int>& buf,
                                  std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(buf);
    return;
  }
  for (int v = prev; v >= lo; --v) {
    buf[static_cast<size_t>(pos)] = v;
    all_nonincreasing_rec(n, lo, pos + 1, v, buf, out);
  }
}

inline std::vector<std::vector<int>> all_nonincreasing(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> buf(static_cast<size_t>(n));
  all_nonincreasing_rec(n, lo, 0, hi, buf, out);
  return out;
}

// Every labeled simple graph on n vertices via edge bitmasks (n <= 5 keeps
// this at 2^10); used as a second, structurally different realization oracle.
inline std::vector<sigmat::SmallGraph> brute_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<sigmat::SmallGraph> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    sigmat::SmallGraph g;
    g.n = n;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask & (1u << b)) g.edges.push_back(slots[b]);
    out.push_back(std::move(g));
  }
  return out;
}

inline bool same_multiset(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace testutil
