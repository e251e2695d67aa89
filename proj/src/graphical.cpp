#include "sigmat/graphical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sigmat {

namespace {

void check_degree_range(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  for (int v : d) {
    if (v < 0 || v > n - 1)
      throw std::invalid_argument("degree " + std::to_string(v) + " outside [0, " +
                                  std::to_string(n - 1) + "]");
  }
}

}  // namespace

bool is_graphical(std::span<const int> d) {
  if (d.empty()) throw std::invalid_argument("is_graphical: empty sequence");
  check_degree_range(d);
  const int n = static_cast<int>(d.size());
  long long sum = 0;
  for (int v : d) sum += v;
  if (sum % 2 != 0) return false;
  long long lhs = 0;
  for (int k = 1; k <= n - 1; ++k) {
    lhs += d[static_cast<size_t>(k - 1)];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min<long long>(k, d[static_cast<size_t>(i)]);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphical(const DegreeSequence& seq) { return is_graphical(seq.values()); }

bool is_tree_sequence(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n < 2) return false;
  long long sum = 0;
  for (int v : d) {
    if (v < 1) return false;
    sum += v;
  }
  return sum == 2LL * n - 2;
}

bool is_tree_sequence(const DegreeSequence& seq) { return is_tree_sequence(seq.values()); }

bool has_connected_realization(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  if (n == 0) throw std::invalid_argument("has_connected_realization: empty sequence");
  if (n == 1) return d[0] == 0;  // the one-vertex graph is connected
  for (int v : d)
    if (v < 0 || v > n - 1) return false;  // not realizable at all
  if (d.back() < 1) return false;
  long long sum = 0;
  for (int v : d) sum += v;
  if (sum < 2LL * (n - 1)) return false;
  return is_graphical(d);
}

bool has_connected_realization(const DegreeSequence& seq) {
  return has_connected_realization(seq.values());
}

DegreeSequence antiregular_sequence(int n, bool connected) {
  if (n <= 3)
    throw std::invalid_argument("antiregular sequences need n >= 4, got n = " + std::to_string(n));
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int d = 1; d <= n - 1; ++d) v.push_back(d);
  v.push_back(n / 2);
  if (!connected) {
    // the other antiregular graph is the complement of the connected one
    for (int& x : v) x = (n - 1) - x;
  }
  return DegreeSequence(std::move(v));
}

namespace {

// Exhaustive labeled enumeration: vertex v picks its neighbors among the
// later vertices, consuming remaining-degree capacity; every labeled graph
// with the target degrees is produced exactly once.
struct RealizationSearch {
  int n;
  const RealizationVisitor& visit;
  bool connected_only;
  std::vector<int> rem;
  std::vector<std::pair<int, int>> edges;
  bool stopped = false;

  void emit() {
    SmallGraph g{n, edges};
    if (connected_only && !g.is_connected()) return;
    if (!visit(g)) stopped = true;
  }

  void descend(int v) {
    if (stopped) return;
    if (v == n) {
      emit();
      return;
    }
    choose(v, v + 1, rem[static_cast<size_t>(v)]);
  }

  // Pick `need` neighbors of v among vertices u, u+1, ..., n-1.
  void choose(int v, int u, int need) {
    if (stopped) return;
    if (need == 0) {
      descend(v + 1);
      return;
    }
    int avail = 0;
    for (int w = u; w < n; ++w) avail += rem[static_cast<size_t>(w)] > 0;
    if (avail < need) return;
    // branch: take edge {v,u} if u still has capacity
    if (rem[static_cast<size_t>(u)] > 0) {
      --rem[static_cast<size_t>(u)];
      edges.emplace_back(v, u);
      choose(v, u + 1, need - 1);
      edges.pop_back();
      ++rem[static_cast<size_t>(u)];
      if (stopped) return;
    }
    // branch: skip u
    choose(v, u + 1, need);
  }
};

}  // namespace

bool for_each_realization(const DegreeSequence& seq, bool connected_only,
                          const RealizationVisitor& visit, int oracle_bound) {
  const int n = seq.n();
  if (n > oracle_bound)
    throw std::invalid_argument("realization oracle limited to n <= " +
                                std::to_string(oracle_bound) + ", got n = " + std::to_string(n));
  if (seq.max_value() > n - 1) return true;  // not realizable, empty stream
  RealizationSearch search{n, visit, connected_only,
                           std::vector<int>(seq.values().begin(), seq.values().end()),
                           {}};
  search.edges.reserve(static_cast<size_t>(seq.sum() / 2));
  search.descend(0);
  return !search.stopped;
}

std::vector<SmallGraph> realizations(const DegreeSequence& seq, bool connected_only,
                                     int oracle_bound) {
  std::vector<SmallGraph> out;
  for_each_realization(
      seq, connected_only,
      [&](const SmallGraph& g) {
        out.push_back(g);
        return true;
      },
      oracle_bound);
  return out;
}

std::optional<SmallGraph> first_realization(const DegreeSequence& seq, bool connected_only,
                                            int oracle_bound) {
  std::optional<SmallGraph> out;
  for_each_realization(
      seq, connected_only,
      [&](const SmallGraph& g) {
        out = g;
        return false;
      },
      oracle_bound);
  return out;
}

}  // namespace sigmat
