#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sigmat/degree_sequence.hpp"

namespace sigmat {

enum class DomainKind {
  IntegerSequences,    // non-increasing multisets over [lo, hi]
  GraphicalSequences,  // Erdos-Gallai-graphical multisets over [min_degree, max_degree]
  TreeSequences,       // positive multisets summing to 2n-2
  ChemicalSequences,   // values in [1,4], connected-realizable (or merely graphical)
};

// A search domain: every sequence is enumerated once, as a non-increasing
// multiset, in lexicographically decreasing order.
struct Domain {
  DomainKind kind = DomainKind::IntegerSequences;
  int n = 0;
  int lo = 1, hi = 0;                // IntegerSequences value bounds
  int min_degree = 0, max_degree = 0;  // GraphicalSequences degree bounds
  bool graphical_only = false;       // ChemicalSequences: drop the connectivity requirement

  static Domain integer_sequences(int n, int lo, int hi);
  static Domain graphical_sequences(int n, int min_degree = 0, int max_degree = -1);
  static Domain tree_sequences(int n);
  static Domain chemical_sequences(int n, bool graphical_only = false);

  // Throws std::invalid_argument for empty or inconsistent domains.
  void validate() const;
  std::string describe() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

const char* domain_kind_name(DomainKind kind);  // "int-seqs", "graphical", ...

// Visitor receives each sequence sorted non-increasing; return false to stop.
using SequenceVisitor = std::function<bool(std::span<const int>)>;

// Returns true iff the enumeration ran to completion.
bool for_each_sequence(const Domain& domain, const SequenceVisitor& visit);

// Exact number of sequences the stream yields (same filters applied).
long long domain_size(const Domain& domain);

// Cheap pre-filter upper bound on the stream length (number of candidate
// multisets before graphicality/connectivity filters). Used by the search
// budget gate; saturates at ~4e18.
long long candidate_count(const Domain& domain);

// A shard is a set of enumeration prefixes; the union of all shards'
// streams is exactly the domain stream, with no duplicates, and each
// shard enumerates independently.
struct DomainShard {
  Domain domain;
  std::vector<std::vector<int>> prefixes;
};

// Partitions the enumeration by fixing prefixes (depth grows until the
// prefix count reaches shard_count, capped at min(4, n)); prefixes are
// dealt round-robin, so shards beyond the prefix count come back empty.
std::vector<DomainShard> shard(const Domain& domain, int shard_count);

bool for_each_sequence(const DomainShard& shard, const SequenceVisitor& visit);

// Materializes the stream; convenience for tests and small domains.
std::vector<DegreeSequence> collect(const Domain& domain);

}  // namespace sigmat
