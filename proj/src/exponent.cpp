#include "sigmat/exponent.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace sigmat {

namespace {

void require_n(int n) {
  if (n < 4)
    throw std::invalid_argument("threshold exponents need n >= 4, got n = " + std::to_string(n));
}

double log_base(double base, double x) { return std::log(x) / std::log(base); }

}  // namespace

double binomial_threshold(int n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  return log_base(nn - 2.0, (nn * nn - nn - 2.0) / (nn * nn - nn - 4.0));
}

double sequence_threshold(int n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  return log_base(nn - 2.0, (nn - 1.0) / (nn - 2.0));
}

double tree_threshold(int n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  return log_base(nn - 2.0, (2.0 * nn - 4.0) / (nn - 1.0));
}

double chemical_threshold(int n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  return log_base(3.0, 3.0 * nn * nn / (3.0 * nn * nn - 8.0));
}

ExponentSpec ExponentSpec::binomial_threshold() { return {ExponentKind::BinomialThreshold, 0.0}; }
ExponentSpec ExponentSpec::sequence_threshold() { return {ExponentKind::SequenceThreshold, 0.0}; }
ExponentSpec ExponentSpec::tree_threshold() { return {ExponentKind::TreeThreshold, 0.0}; }
ExponentSpec ExponentSpec::chemical_threshold() { return {ExponentKind::ChemicalThreshold, 0.0}; }
ExponentSpec ExponentSpec::reciprocal() { return {ExponentKind::Reciprocal, 0.0}; }

ExponentSpec ExponentSpec::constant(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("constant exponent must lie in (0,1), got " + std::to_string(c));
  return {ExponentKind::Constant, c};
}

ExponentSpec ExponentSpec::explicit_value(double f) {
  if (!(f > 0.0))
    throw std::invalid_argument("exponent must be positive, got " + std::to_string(f));
  return {ExponentKind::ExplicitValue, f};
}

ExponentSpec ExponentSpec::parse(const std::string& text) {
  if (text == "1/n") return reciprocal();
  if (text == "bin-threshold") return binomial_threshold();
  if (text == "seq-threshold") return sequence_threshold();
  if (text == "tree-threshold") return tree_threshold();
  if (text == "chem-threshold") return chemical_threshold();
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("unrecognized exponent spec '" + text + "'");
  return explicit_value(v);
}

double ExponentSpec::resolve(int n) const {
  switch (kind_) {
    case ExponentKind::BinomialThreshold: return sigmat::binomial_threshold(n);
    case ExponentKind::SequenceThreshold: return sigmat::sequence_threshold(n);
    case ExponentKind::TreeThreshold: return sigmat::tree_threshold(n);
    case ExponentKind::ChemicalThreshold: return sigmat::chemical_threshold(n);
    case ExponentKind::Reciprocal:
      if (n < 1) throw std::invalid_argument("reciprocal exponent needs n >= 1");
      return 1.0 / static_cast<double>(n);
    case ExponentKind::Constant:
    case ExponentKind::ExplicitValue: return value_;
  }
  throw std::logic_error("unreachable exponent kind");
}

std::string ExponentSpec::to_string() const {
  switch (kind_) {
    case ExponentKind::BinomialThreshold: return "bin-threshold";
    case ExponentKind::SequenceThreshold: return "seq-threshold";
    case ExponentKind::TreeThreshold: return "tree-threshold";
    case ExponentKind::ChemicalThreshold: return "chem-threshold";
    case ExponentKind::Reciprocal: return "1/n";
    case ExponentKind::Constant:
    case ExponentKind::ExplicitValue: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", value_);
      return buf;
    }
  }
  return "?";
}

}  // namespace sigmat
