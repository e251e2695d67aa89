#include "sigmat/degree_sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sigmat {

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("DegreeSequence: empty sequence");
  for (int v : values_) {
    if (v < 0)
      throw std::invalid_argument("DegreeSequence: negative value " + std::to_string(v));
  }
  if (!std::is_sorted(values_.begin(), values_.end(), std::greater<int>()))
    std::sort(values_.begin(), values_.end(), std::greater<int>());
}

long long DegreeSequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

}  // namespace sigmat
