#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sigmat/exponent.hpp"

using namespace sigmat;

namespace {

// n values spanning the whole desk-scale range
std::vector<int> sample_ns() {
  std::vector<int> ns;
  for (int n = 4; n <= 400; ++n) ns.push_back(n);
  for (int n = 500; n <= 1'000'000; n = n * 3 / 2) ns.push_back(n);
  ns.push_back(1'000'000);
  return ns;
}

}  // namespace

TEST_CASE("thresholds invert to their defining ratios") {
  for (int n : sample_ns()) {
    const double base = n - 2.0;
    CHECK(std::pow(base, binomial_threshold(n)) ==
          doctest::Approx((double(n) * n - n - 2) / (double(n) * n - n - 4)).epsilon(1e-12));
    CHECK(std::pow(base, sequence_threshold(n)) ==
          doctest::Approx((n - 1.0) / (n - 2.0)).epsilon(1e-12));
    CHECK(std::pow(base, tree_threshold(n)) ==
          doctest::Approx((2.0 * n - 4.0) / (n - 1.0)).epsilon(1e-12));
    CHECK(std::pow(3.0, chemical_threshold(n)) ==
          doctest::Approx(3.0 * n * n / (3.0 * n * n - 8.0)).epsilon(1e-12));
  }
}

TEST_CASE("thresholds are positive and ordered") {
  for (int n : sample_ns()) {
    CHECK(binomial_threshold(n) > 0.0);
    CHECK(sequence_threshold(n) > 0.0);
    CHECK(tree_threshold(n) > 0.0);
    CHECK(chemical_threshold(n) > 0.0);
    CHECK(sequence_threshold(n) > binomial_threshold(n));
  }
}

TEST_CASE("sequence threshold drops below 1/n from n = 6 on") {
  CHECK(sequence_threshold(4) > 0.25);
  CHECK(sequence_threshold(5) > 0.2);
  for (int n : sample_ns())
    if (n >= 6) CHECK(sequence_threshold(n) < 1.0 / n);
}

TEST_CASE("known n = 4 values") {
  CHECK(binomial_threshold(4) == doctest::Approx(std::log(1.25) / std::log(2.0)));
  CHECK(sequence_threshold(4) == doctest::Approx(std::log(1.5) / std::log(2.0)));
  CHECK(tree_threshold(4) == doctest::Approx(std::log(4.0 / 3.0) / std::log(2.0)));
  CHECK(chemical_threshold(4) == doctest::Approx(std::log(48.0 / 40.0) / std::log(3.0)));
}

TEST_CASE("thresholds reject n <= 3") {
  CHECK_THROWS_AS(binomial_threshold(3), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSpec::tree_threshold().resolve(3), std::invalid_argument);
}

TEST_CASE("exponent spec resolution") {
  CHECK(ExponentSpec::reciprocal().resolve(8) == doctest::Approx(0.125));
  CHECK(ExponentSpec::constant(0.5).resolve(100) == 0.5);
  CHECK(ExponentSpec::explicit_value(2.0).resolve(5) == 2.0);
  CHECK(ExponentSpec::binomial_threshold().resolve(6) == doctest::Approx(binomial_threshold(6)));
  CHECK_THROWS_AS(ExponentSpec::constant(1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSpec::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSpec::explicit_value(-2.0), std::invalid_argument);
}

TEST_CASE("exponent mini-language") {
  CHECK(ExponentSpec::parse("1/n").kind() == ExponentKind::Reciprocal);
  CHECK(ExponentSpec::parse("bin-threshold").kind() == ExponentKind::BinomialThreshold);
  CHECK(ExponentSpec::parse("seq-threshold").kind() == ExponentKind::SequenceThreshold);
  CHECK(ExponentSpec::parse("tree-threshold").kind() == ExponentKind::TreeThreshold);
  CHECK(ExponentSpec::parse("chem-threshold").kind() == ExponentKind::ChemicalThreshold);
  CHECK(ExponentSpec::parse("0.5").resolve(9) == 0.5);
  CHECK(ExponentSpec::parse("2").resolve(9) == 2.0);

  for (const char* bad : {"", "n/1", "0.5x", "two", "1 / n"}) {
    CHECK_THROWS_WITH_AS(ExponentSpec::parse(bad), doctest::Contains(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(ExponentSpec::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSpec::parse("-1"), std::invalid_argument);
}

TEST_CASE("round trip through to_string") {
  for (const char* text : {"1/n", "bin-threshold", "seq-threshold", "tree-threshold",
                           "chem-threshold", "0.25", "2"}) {
    const ExponentSpec spec = ExponentSpec::parse(text);
    const ExponentSpec again = ExponentSpec::parse(spec.to_string());
    CHECK(again == spec);
  }
}
