#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sigmat/degree_sequence.hpp"
#include "sigmat/small_graph.hpp"

namespace sigmat {

// Erdos-Gallai test: true iff the sum is even and
//   d_1 + ... + d_k <= k(k-1) + sum_{i>k} min(k, d_i)   for all 1 <= k <= n-1.
// The inequality is checked verbatim for every k, no distinct-degree
// shortcut. Input must be non-increasing with values in [0, n-1];
// out-of-range values throw std::invalid_argument.
bool is_graphical(std::span<const int> sorted_non_increasing);
bool is_graphical(const DegreeSequence& seq);

// True iff n >= 2, every value >= 1, and the values sum to 2n-2
// (exactly the degree multisets of trees).
bool is_tree_sequence(std::span<const int> sorted_non_increasing);
bool is_tree_sequence(const DegreeSequence& seq);

// True iff some connected simple graph realizes the sequence:
// graphical, min degree >= 1 and sum >= 2(n-1). The single-vertex
// sequence (0) counts as connected.
bool has_connected_realization(std::span<const int> sorted_non_increasing);
bool has_connected_realization(const DegreeSequence& seq);

// Degree multiset of the antiregular graph on n vertices (n >= 4).
// connected=true:  {1, ..., n-1} with floor(n/2) twice.
// connected=false: the complement's degrees, {0, ..., n-2} with
//                  (n-1) - floor(n/2) twice.
DegreeSequence antiregular_sequence(int n, bool connected);

// The realization oracle enumerates every labeled simple graph with the
// given degree sequence (exhaustive backtracking with degree-capacity
// pruning). Ground truth only; refuses n above the bound.
inline constexpr int kRealizationOracleBound = 8;

using RealizationVisitor = std::function<bool(const SmallGraph&)>;

// Calls `visit` for each realization in a fixed deterministic order until
// it returns false. Returns true iff the enumeration ran to completion.
bool for_each_realization(const DegreeSequence& seq, bool connected_only,
                          const RealizationVisitor& visit,
                          int oracle_bound = kRealizationOracleBound);

std::vector<SmallGraph> realizations(const DegreeSequence& seq, bool connected_only,
                                     int oracle_bound = kRealizationOracleBound);

std::optional<SmallGraph> first_realization(const DegreeSequence& seq, bool connected_only,
                                            int oracle_bound = kRealizationOracleBound);

}  // namespace sigmat
