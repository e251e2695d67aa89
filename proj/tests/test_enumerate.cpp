#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "sigmat/enumerate.hpp"
#include "sigmat/graphical.hpp"
#include "test_util.hpp"

using namespace sigmat;
using testutil::all_nonincreasing;

namespace {

std::vector<std::vector<int>> stream_of(const Domain& d) {
  std::vector<std::vector<int>> out;
  for_each_sequence(d, [&](std::span<const int> v) {
    out.emplace_back(v.begin(), v.end());
    return true;
  });
  return out;
}

std::vector<std::vector<int>> stream_of(const DomainShard& s) {
  std::vector<std::vector<int>> out;
  for_each_sequence(s, [&](std::span<const int> v) {
    out.emplace_back(v.begin(), v.end());
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("tree sequences n = 4") {
  const auto stream = stream_of(Domain::tree_sequences(4));
  CHECK(stream == std::vector<std::vector<int>>{{3, 1, 1, 1}, {2, 2, 1, 1}});
  CHECK(domain_size(Domain::tree_sequences(4)) == 2);
  CHECK(candidate_count(Domain::tree_sequences(4)) == 2);
}

TEST_CASE("integer sequences n = 4 over [1,3]") {
  const Domain d = Domain::integer_sequences(4, 1, 3);
  const auto stream = stream_of(d);
  CHECK(stream.size() == 15);
  CHECK(domain_size(d) == 15);
  CHECK(candidate_count(d) == 15);
  CHECK(stream == all_nonincreasing(4, 1, 3));
  // lexicographically decreasing
  CHECK(std::is_sorted(stream.begin(), stream.end(), std::greater<std::vector<int>>()));
}

TEST_CASE("streams are complete, duplicate-free and ordered") {
  for (int n = 4; n <= 7; ++n) {
    {
      const auto stream = stream_of(Domain::graphical_sequences(n));
      std::vector<std::vector<int>> brute;
      for (const auto& v : all_nonincreasing(n, 0, n - 1))
        if (is_graphical(DegreeSequence(v))) brute.push_back(v);
      CHECK(stream == brute);
      CHECK(std::set(stream.begin(), stream.end()).size() == stream.size());
    }
    {
      const auto stream = stream_of(Domain::chemical_sequences(n));
      std::vector<std::vector<int>> brute;
      for (const auto& v : all_nonincreasing(n, 1, std::min(4, n - 1)))
        if (has_connected_realization(DegreeSequence(v))) brute.push_back(v);
      CHECK(stream == brute);
    }
    {
      const auto stream = stream_of(Domain::tree_sequences(n));
      std::vector<std::vector<int>> brute;
      for (const auto& v : all_nonincreasing(n, 1, n - 1))
        if (is_tree_sequence(DegreeSequence(v))) brute.push_back(v);
      CHECK(stream == brute);
    }
  }
}

TEST_CASE("chemical stream invariants") {
  for (int n = 5; n <= 9; ++n) {
    for_each_sequence(Domain::chemical_sequences(n), [&](std::span<const int> v) {
      long long sum = 0;
      for (int x : v) {
        CHECK(x >= 1);
        CHECK(x <= 4);
        sum += x;
      }
      CHECK(sum % 2 == 0);
      CHECK(sum >= 2 * (n - 1));
      // pairs of distinct values never exceed (3/8) n^2
      long long distinct_pairs = 0;
      for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) distinct_pairs += v[i] != v[j];
      CHECK(8 * distinct_pairs <= 3 * n * n);
      return true;
    });
  }
  const auto stream = stream_of(Domain::chemical_sequences(5));
  CHECK(std::find(stream.begin(), stream.end(), std::vector<int>{4, 1, 1, 1, 1}) != stream.end());
  CHECK(std::find(stream.begin(), stream.end(), std::vector<int>{2, 2, 2, 2, 2}) != stream.end());
}

TEST_CASE("graphical-only chemical domain is a superset") {
  for (int n = 5; n <= 8; ++n) {
    const auto connected = stream_of(Domain::chemical_sequences(n, false));
    const auto graphical = stream_of(Domain::chemical_sequences(n, true));
    CHECK(graphical.size() >= connected.size());
    for (const auto& v : connected)
      CHECK(std::find(graphical.begin(), graphical.end(), v) != graphical.end());
  }
}

TEST_CASE("graphical domain respects degree bounds") {
  const auto bounded = stream_of(Domain::graphical_sequences(6, 1, 3));
  for (const auto& v : bounded) {
    CHECK(v.front() <= 3);
    CHECK(v.back() >= 1);
  }
  // cross-check count against the unrestricted stream
  const auto full = stream_of(Domain::graphical_sequences(6));
  long long expected = 0;
  for (const auto& v : full) expected += v.front() <= 3 && v.back() >= 1;
  CHECK(static_cast<long long>(bounded.size()) == expected);
}

TEST_CASE("candidate_count bounds domain_size") {
  for (int n = 4; n <= 8; ++n) {
    for (const Domain& d : {Domain::graphical_sequences(n), Domain::chemical_sequences(n),
                            Domain::tree_sequences(n), Domain::integer_sequences(n, 1, n - 1)}) {
      CHECK(candidate_count(d) >= domain_size(d));
    }
  }
  // closed forms
  CHECK(candidate_count(Domain::integer_sequences(8, 1, 7)) == 3003);  // C(14,8)
  CHECK(candidate_count(Domain::tree_sequences(10)) == 22);            // p(8)
}

TEST_CASE("sharding partitions the stream") {
  const Domain domains[] = {Domain::tree_sequences(7), Domain::integer_sequences(5, 1, 4),
                            Domain::graphical_sequences(6), Domain::chemical_sequences(6)};
  for (const Domain& d : domains) {
    const auto full = stream_of(d);
    for (int count : {1, 2, 3, 4, 8}) {
      const auto pieces = shard(d, count);
      REQUIRE(static_cast<int>(pieces.size()) == count);
      std::vector<std::vector<int>> merged;
      for (const auto& piece : pieces) {
        const auto part = stream_of(piece);
        merged.insert(merged.end(), part.begin(), part.end());
      }
      CHECK(merged.size() == full.size());
      std::sort(merged.begin(), merged.end(), std::greater<std::vector<int>>());
      CHECK(merged == full);
    }
  }
}

TEST_CASE("more shards than sequences leaves some shards empty") {
  const auto pieces = shard(Domain::tree_sequences(4), 8);
  REQUIRE(pieces.size() == 8);
  std::vector<std::vector<int>> merged;
  int empty = 0;
  for (const auto& piece : pieces) {
    const auto part = stream_of(piece);
    if (part.empty()) ++empty;
    merged.insert(merged.end(), part.begin(), part.end());
  }
  CHECK(empty >= 6);
  std::sort(merged.begin(), merged.end(), std::greater<std::vector<int>>());
  CHECK(merged == stream_of(Domain::tree_sequences(4)));
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(Domain::integer_sequences(4, 0, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Domain::integer_sequences(4, 3, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Domain::integer_sequences(3, 1, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Domain::graphical_sequences(3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Domain::graphical_sequences(5, 3, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Domain::tree_sequences(1).validate(), std::invalid_argument);
  CHECK_NOTHROW(Domain::tree_sequences(2).validate());
  CHECK_THROWS_AS(shard(Domain::tree_sequences(5), 0), std::invalid_argument);
}

TEST_CASE("early stop propagates through shards") {
  int seen = 0;
  const bool completed = for_each_sequence(Domain::integer_sequences(5, 1, 4),
                                           [&](std::span<const int>) { return ++seen < 3; });
  CHECK_FALSE(completed);
  CHECK(seen == 3);
}

TEST_CASE("collect materializes canonical sequences") {
  const auto seqs = collect(Domain::tree_sequences(5));
  REQUIRE(seqs.size() == domain_size(Domain::tree_sequences(5)));
  for (const auto& s : seqs) CHECK(is_tree_sequence(s));
}
