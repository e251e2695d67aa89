#pragma once

#include <span>
#include <string>
#include <vector>

namespace sigmat {

// A multiset of non-negative integers kept sorted non-increasing.
// Serves both as a graph degree sequence (values <= n-1) and as a plain
// integer sequence for the sequence-level extremal statements (values in
// [1, n-1]); neither range is enforced here, callers that need a range
// check it at the operation boundary.
class DegreeSequence {
 public:
  // Sorts the input non-increasing. Rejects empty input and negative values.
  explicit DegreeSequence(std::vector<int> values);

  int n() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }
  const std::vector<int>& vec() const { return values_; }
  int max_value() const { return values_.front(); }
  int min_value() const { return values_.back(); }
  long long sum() const;
  bool is_constant() const { return values_.front() == values_.back(); }

  // "4,3,2,2,1"
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

}  // namespace sigmat
