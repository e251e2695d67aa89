#pragma once

#include <utility>
#include <vector>

#include "sigmat/degree_sequence.hpp"

namespace sigmat {

// A labeled simple graph, small enough for exhaustive work (n <= ~10).
// Only the realization oracle and the edge-based indices need actual
// adjacency; everything else in the project is degree-sequence determined.
struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, u < v

  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<int> degree_list() const;  // indexed by vertex
  DegreeSequence degree_sequence() const;
  bool is_connected() const;
};

// Albertson irregularity: sum of |d(u)-d(v)| over edges.
long long irr(const SmallGraph& g);
// sigma irregularity: sum of (d(u)-d(v))^2 over edges.
long long sigma(const SmallGraph& g);

}  // namespace sigmat
