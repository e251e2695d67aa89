#pragma once

#include <string>

namespace sigmat {

// The named exponent thresholds. All are ratios of natural logs and are
// positive for every n >= 4.
double binomial_threshold(int n);   // log_{n-2}((n^2-n-2)/(n^2-n-4))
double sequence_threshold(int n);   // log_{n-2}((n-1)/(n-2))
double tree_threshold(int n);       // log_{n-2}((2n-4)/(n-1))
double chemical_threshold(int n);   // log_3(3n^2/(3n^2-8))

enum class ExponentKind {
  BinomialThreshold,
  SequenceThreshold,
  TreeThreshold,
  ChemicalThreshold,
  Reciprocal,     // f(n) = 1/n
  Constant,       // fixed c in (0,1)
  ExplicitValue,  // any fixed f > 0
};

// An exponent f(n): either a named threshold family, the reciprocal 1/n,
// or a fixed value. Resolves to a positive real given n.
class ExponentSpec {
 public:
  static ExponentSpec binomial_threshold();
  static ExponentSpec sequence_threshold();
  static ExponentSpec tree_threshold();
  static ExponentSpec chemical_threshold();
  static ExponentSpec reciprocal();
  static ExponentSpec constant(double c);        // requires 0 < c < 1
  static ExponentSpec explicit_value(double f);  // requires f > 0

  // Mini-language: a positive literal ("0.5", "2"), "1/n", or one of
  // "bin-threshold", "seq-threshold", "tree-threshold", "chem-threshold".
  // Throws std::invalid_argument naming the bad token.
  static ExponentSpec parse(const std::string& text);

  ExponentKind kind() const { return kind_; }
  // Threshold kinds require n >= 4.
  double resolve(int n) const;
  std::string to_string() const;

  friend bool operator==(const ExponentSpec&, const ExponentSpec&) = default;

 private:
  ExponentSpec(ExponentKind kind, double value) : kind_(kind), value_(value) {}

  ExponentKind kind_;
  double value_ = 0.0;
};

}  // namespace sigmat
