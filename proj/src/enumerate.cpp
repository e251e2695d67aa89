#include "sigmat/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigmat/graphical.hpp"

namespace sigmat {

namespace {

constexpr long long kCountClamp = 4'000'000'000'000'000'000LL;

long long sat_add(long long a, long long b) {
  if (a > kCountClamp - b) return kCountClamp;
  return a + b;
}

// C(k+n-1, n): number of size-n multisets over k values. Saturates.
long long multiset_count(int k, int n) {
  if (k <= 0) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= n; ++i) {
    r = r * static_cast<unsigned>(k - 1 + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(kCountClamp)) return kCountClamp;
  }
  return static_cast<long long>(r);
}

// p(m): number of integer partitions of m. Saturates.
long long partition_count(int m) {
  if (m < 0) return 0;
  std::vector<long long> p(static_cast<size_t>(m) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= m; ++part)
    for (int j = part; j <= m; ++j)
      p[static_cast<size_t>(j)] = sat_add(p[static_cast<size_t>(j)], p[static_cast<size_t>(j - part)]);
  return p[static_cast<size_t>(m)];
}

struct Bounds {
  int lo = 0, hi = 0;
  bool sum_constrained = false;
  long long target_sum = 0;
};

Bounds domain_bounds(const Domain& d) {
  switch (d.kind) {
    case DomainKind::IntegerSequences:
      return {d.lo, d.hi, false, 0};
    case DomainKind::TreeSequences:
      return {1, d.n - 1, true, 2LL * d.n - 2};
    case DomainKind::GraphicalSequences:
      return {d.min_degree, std::min(d.max_degree, d.n - 1), false, 0};
    case DomainKind::ChemicalSequences:
      return {1, std::min(4, d.n - 1), false, 0};
  }
  throw std::logic_error("unreachable domain kind");
}

bool leaf_accepts(const Domain& d, std::span<const int> v) {
  switch (d.kind) {
    case DomainKind::IntegerSequences:
    case DomainKind::TreeSequences:
      return true;
    case DomainKind::GraphicalSequences:
      return is_graphical(v);
    case DomainKind::ChemicalSequences:
      return d.graphical_only ? is_graphical(v) : has_connected_realization(v);
  }
  return false;
}

// Recursive multiset generator in lexicographically decreasing order.
// For sum-constrained domains the value range at each position is tightened
// so that every explored branch stays completable.
struct Gen {
  const Domain& d;
  Bounds b;
  const SequenceVisitor& visit;
  std::vector<int> buf;
  bool keep_going = true;

  void rec(int pos, int prev, long long sum) {
    if (!keep_going) return;
    const int n = d.n;
    if (pos == n) {
      if (leaf_accepts(d, buf)) keep_going = visit(std::span<const int>(buf));
      return;
    }
    long long vmax = std::min(prev, b.hi);
    long long vmin = b.lo;
    if (b.sum_constrained) {
      const long long remaining = n - pos;
      const long long need = b.target_sum - sum;
      vmin = std::max<long long>(vmin, (need + remaining - 1) / remaining);
      vmax = std::min<long long>(vmax, need - (remaining - 1) * b.lo);
    }
    for (long long v = vmax; v >= vmin; --v) {
      buf[static_cast<size_t>(pos)] = static_cast<int>(v);
      rec(pos + 1, static_cast<int>(v), sum + v);
      if (!keep_going) return;
    }
  }

  // Enumerate completions of a fixed prefix.
  void run(std::span<const int> prefix) {
    long long sum = 0;
    for (size_t i = 0; i < prefix.size(); ++i) {
      buf[i] = prefix[i];
      sum += prefix[i];
    }
    const int prev = prefix.empty() ? b.hi : prefix.back();
    rec(static_cast<int>(prefix.size()), prev, sum);
  }
};

// Structural prefixes of the given depth (no leaf filters); every prefix is
// completable for sum-constrained domains thanks to the range tightening.
std::vector<std::vector<int>> collect_prefixes(const Domain& d, int depth) {
  const Bounds b = domain_bounds(d);
  std::vector<std::vector<int>> out;
  std::vector<int> buf(static_cast<size_t>(depth));
  struct Rec {
    const Bounds& b;
    int n, depth;
    std::vector<int>& buf;
    std::vector<std::vector<int>>& out;
    void operator()(int pos, int prev, long long sum) const {
      if (pos == depth) {
        out.push_back(buf);
        return;
      }
      long long vmax = std::min(prev, b.hi);
      long long vmin = b.lo;
      if (b.sum_constrained) {
        const long long remaining = n - pos;
        const long long need = b.target_sum - sum;
        vmin = std::max<long long>(vmin, (need + remaining - 1) / remaining);
        vmax = std::min<long long>(vmax, need - (remaining - 1) * b.lo);
      }
      for (long long v = vmax; v >= vmin; --v) {
        buf[static_cast<size_t>(pos)] = static_cast<int>(v);
        (*this)(pos + 1, static_cast<int>(v), sum + v);
      }
    }
  };
  Rec{b, d.n, depth, buf, out}(0, b.hi, 0);
  return out;
}

}  // namespace

Domain Domain::integer_sequences(int n, int lo, int hi) {
  Domain d;
  d.kind = DomainKind::IntegerSequences;
  d.n = n;
  d.lo = lo;
  d.hi = hi;
  return d;
}

Domain Domain::graphical_sequences(int n, int min_degree, int max_degree) {
  Domain d;
  d.kind = DomainKind::GraphicalSequences;
  d.n = n;
  d.min_degree = min_degree;
  d.max_degree = max_degree < 0 ? n - 1 : max_degree;
  return d;
}

Domain Domain::tree_sequences(int n) {
  Domain d;
  d.kind = DomainKind::TreeSequences;
  d.n = n;
  return d;
}

Domain Domain::chemical_sequences(int n, bool graphical_only) {
  Domain d;
  d.kind = DomainKind::ChemicalSequences;
  d.n = n;
  d.graphical_only = graphical_only;
  return d;
}

void Domain::validate() const {
  const int min_n = kind == DomainKind::TreeSequences ? 2 : 4;
  if (n < min_n)
    throw std::invalid_argument(std::string(domain_kind_name(kind)) + " domain needs n >= " +
                                std::to_string(min_n) + ", got n = " + std::to_string(n));
  switch (kind) {
    case DomainKind::IntegerSequences:
      if (!(1 <= lo && lo <= hi && hi <= n - 1))
        throw std::invalid_argument("integer sequence bounds must satisfy 1 <= lo <= hi <= n-1");
      break;
    case DomainKind::GraphicalSequences:
      if (!(0 <= min_degree && min_degree <= max_degree && max_degree <= n - 1))
        throw std::invalid_argument("degree bounds must satisfy 0 <= min <= max <= n-1");
      break;
    case DomainKind::TreeSequences:
    case DomainKind::ChemicalSequences:
      break;
  }
}

std::string Domain::describe() const {
  std::string s = domain_kind_name(kind);
  s += " n=" + std::to_string(n);
  switch (kind) {
    case DomainKind::IntegerSequences:
      s += " values=[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
      break;
    case DomainKind::GraphicalSequences:
      s += " degrees=[" + std::to_string(min_degree) + "," + std::to_string(max_degree) + "]";
      break;
    case DomainKind::ChemicalSequences:
      if (graphical_only) s += " (graphical-only)";
      break;
    case DomainKind::TreeSequences:
      break;
  }
  return s;
}

const char* domain_kind_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::IntegerSequences: return "int-seqs";
    case DomainKind::GraphicalSequences: return "graphical";
    case DomainKind::TreeSequences: return "trees";
    case DomainKind::ChemicalSequences: return "chemical";
  }
  return "?";
}

bool for_each_sequence(const Domain& domain, const SequenceVisitor& visit) {
  domain.validate();
  Gen g{domain, domain_bounds(domain), visit, std::vector<int>(static_cast<size_t>(domain.n))};
  g.run({});
  return g.keep_going;
}

bool for_each_sequence(const DomainShard& shard, const SequenceVisitor& visit) {
  shard.domain.validate();
  Gen g{shard.domain, domain_bounds(shard.domain), visit,
        std::vector<int>(static_cast<size_t>(shard.domain.n))};
  for (const auto& prefix : shard.prefixes) {
    g.run(prefix);
    if (!g.keep_going) return false;
  }
  return true;
}

long long domain_size(const Domain& domain) {
  long long count = 0;
  for_each_sequence(domain, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

long long candidate_count(const Domain& domain) {
  domain.validate();
  const Bounds b = domain_bounds(domain);
  switch (domain.kind) {
    case DomainKind::IntegerSequences:
    case DomainKind::GraphicalSequences:
    case DomainKind::ChemicalSequences:
      return multiset_count(b.hi - b.lo + 1, domain.n);
    case DomainKind::TreeSequences:
      return partition_count(domain.n - 2);
  }
  throw std::logic_error("unreachable domain kind");
}

std::vector<DomainShard> shard(const Domain& domain, int shard_count) {
  domain.validate();
  if (shard_count < 1) throw std::invalid_argument("shard_count must be >= 1");
  if (shard_count == 1) return {DomainShard{domain, {{}}}};
  const int max_depth = std::min(4, domain.n);
  std::vector<std::vector<int>> prefixes;
  for (int depth = 1; depth <= max_depth; ++depth) {
    prefixes = collect_prefixes(domain, depth);
    if (static_cast<int>(prefixes.size()) >= shard_count) break;
  }
  std::vector<DomainShard> shards(static_cast<size_t>(shard_count), DomainShard{domain, {}});
  for (size_t i = 0; i < prefixes.size(); ++i)
    shards[i % static_cast<size_t>(shard_count)].prefixes.push_back(std::move(prefixes[i]));
  return shards;
}

std::vector<DegreeSequence> collect(const Domain& domain) {
  std::vector<DegreeSequence> out;
  for_each_sequence(domain, [&](std::span<const int> v) {
    out.emplace_back(std::vector<int>(v.begin(), v.end()));
    return true;
  });
  return out;
}

}  // namespace sigmat
