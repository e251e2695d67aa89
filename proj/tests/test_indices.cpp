#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sigmat/exponent.hpp"
#include "sigmat/indices.hpp"
#include "test_util.hpp"

using namespace sigmat;
using testutil::all_nonincreasing;
using testutil::naive_irr_t;
using testutil::naive_profile;
using testutil::naive_sigma_f;

TEST_CASE("difference profile counts pairs by difference") {
  const auto regular = difference_profile(DegreeSequence({2, 2, 2}));
  CHECK(regular.counts == std::vector<long long>{3, 0});

  // seven positions, counted by the plain double loop
  const std::vector<int> fig{3, 2, 2, 2, 1, 1, 1};
  const auto p = difference_profile(DegreeSequence(fig));
  CHECK(p.counts == naive_profile(fig));
  CHECK(p.counts == std::vector<long long>{6, 12, 3, 0, 0, 0});
  CHECK(p.total_pairs() == 21);

  const auto distinct = difference_profile(DegreeSequence({3, 2, 1}));
  CHECK(distinct.counts == std::vector<long long>{0, 2, 1});

  CHECK(difference_profile(DegreeSequence({5})).counts.empty());
}

TEST_CASE("profile equals the naive double loop on every small sequence") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& v : all_nonincreasing(n, 0, n - 1)) {
      CHECK(difference_profile(DegreeSequence(v)).counts == naive_profile(v));
    }
  }
  // spot checks at n = 9
  for (const std::vector<int>& v : {std::vector<int>{8, 8, 7, 5, 5, 3, 2, 1, 1},
                                    std::vector<int>{4, 4, 4, 4, 3, 3, 2, 0, 0}}) {
    CHECK(difference_profile(DegreeSequence(v)).counts == naive_profile(v));
  }
}

TEST_CASE("sigma_t_f matches closed forms") {
  for (int n = 5; n <= 12; ++n) {
    for (double f : {0.1, 0.5, 1.0, 2.0, 1.0 / n}) {
      std::vector<int> path(static_cast<size_t>(n), 2);
      path[0] = path[1] = 1;
      const double p = sigma_t_f(difference_profile(DegreeSequence(path)), f).value;
      CHECK(p == doctest::Approx(2.0 * n - 4.0).epsilon(1e-12));

      std::vector<int> star(static_cast<size_t>(n), 1);
      star[0] = n - 1;
      const double s = sigma_t_f(difference_profile(DegreeSequence(star)), f).value;
      CHECK(s == doctest::Approx((n - 1.0) * std::pow(n - 2.0, f)).epsilon(1e-12));
    }
  }
  // the n = 4 exceptional tie value: 4 * 2^f = 6 at f = log_2(3/2)
  const double f = std::log(1.5) / std::log(2.0);
  const double v = sigma_t_f(difference_profile(DegreeSequence({3, 3, 1, 1})), f).value;
  CHECK(v == doctest::Approx(6.0).epsilon(1e-12));
  const double v2 = sigma_t_f(difference_profile(DegreeSequence({3, 2, 1, 1})), f).value;
  CHECK(v2 == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("sigma_t_f rejects non-positive exponents") {
  const auto p = difference_profile(DegreeSequence({2, 1}));
  CHECK_THROWS_AS(sigma_t_f(p, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_t_f(p, -1.0), std::invalid_argument);
}

TEST_CASE("index is zero exactly on constant sequences") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& v : all_nonincreasing(n, 0, n - 1)) {
      const DegreeSequence seq(v);
      for (double f : {0.2, 1.0, 2.0}) {
        const double val = sigma_t_f(difference_profile(seq), f).value;
        if (seq.is_constant())
          CHECK(val == 0.0);
        else
          CHECK(val > 0.0);
      }
    }
  }
}

TEST_CASE("indices are permutation invariant") {
  const std::vector<int> shuffled{1, 3, 2, 1, 2, 2, 1};
  const std::vector<int> sorted{3, 2, 2, 2, 1, 1, 1};
  CHECK(DegreeSequence(shuffled) == DegreeSequence(sorted));
  CHECK(irr_t(DegreeSequence(shuffled)) == irr_t(DegreeSequence(sorted)));
  CHECK(sigma_t_classic(DegreeSequence(shuffled)) == sigma_t_classic(DegreeSequence(sorted)));
}

TEST_CASE("sigma_t_f is nondecreasing in f") {
  const double fs[] = {0.05, 0.2, 0.5, 1.0, 1.5, 2.0, 3.0};
  for (int n = 2; n <= 6; ++n) {
    for (const auto& v : all_nonincreasing(n, 0, n - 1)) {
      const auto p = difference_profile(DegreeSequence(v));
      double prev = -1.0;
      for (double f : fs) {
        const double val = sigma_t_f(p, f).value;
        CHECK(val >= prev - 1e-12);
        prev = val;
      }
    }
  }
}

TEST_CASE("exact integer indices") {
  const DegreeSequence fig({1, 1, 1, 2, 2, 2, 3});
  CHECK(sigma_t_classic(fig) == 24);
  CHECK(first_zagreb(fig) == 24);
  // n*M1 - 4m^2 with n = 7, m = 6
  CHECK(sigma_t_classic(fig) == 7 * first_zagreb(fig) - 4 * 6 * 6);

  CHECK(sigma_t_classic(DegreeSequence({5, 5, 5, 5})) == 0);
  // star on 5 vertices: (n-1)(n-2)^2
  CHECK(sigma_t_classic(DegreeSequence({4, 1, 1, 1, 1})) == 4 * 9);

  CHECK(first_zagreb(DegreeSequence({2, 2, 2, 2})) == 16);
  CHECK(first_zagreb(DegreeSequence({4, 1, 1, 1, 1})) == 20);
}

TEST_CASE("irr_t values") {
  // The degree sequence (1,1,1,2,2,2,3) has irr_t = 18, by the defining
  // double loop; the value 22 often quoted next to it belongs to
  // (1,1,1,1,2,3,3), which is checked right after.
  const std::vector<int> misquoted{3, 2, 2, 2, 1, 1, 1};
  CHECK(naive_irr_t(misquoted) == 18);
  CHECK(irr_t(DegreeSequence(misquoted)) == 18);

  const std::vector<int> consistent{3, 3, 2, 1, 1, 1, 1};
  CHECK(naive_irr_t(consistent) == 22);
  CHECK(irr_t(DegreeSequence(consistent)) == 22);

  CHECK(irr_t(DegreeSequence({7, 7, 7})) == 0);
  CHECK(irr_t(DegreeSequence({3, 2, 1})) == 4);
}

TEST_CASE("compare_values tie policy") {
  CHECK(compare_values({0.0}, {0.0}) == Ordering::Tie);
  CHECK(compare_values({1.0}, {2.0}) == Ordering::Less);
  CHECK(compare_values({2.0}, {1.0}) == Ordering::Greater);
  CHECK(compare_values({1.0}, {1.0 + 1e-12}) == Ordering::Tie);
  CHECK(compare_values({1.0}, {1.0 + 1e-6}) == Ordering::Less);

  // path and star tie exactly at the tree threshold
  for (int n = 5; n <= 14; ++n) {
    const double f = tree_threshold(n);
    std::vector<int> path(static_cast<size_t>(n), 2);
    path[0] = path[1] = 1;
    std::vector<int> star(static_cast<size_t>(n), 1);
    star[0] = n - 1;
    const IndexValue p = sigma_t_f(difference_profile(DegreeSequence(path)), f);
    const IndexValue s = sigma_t_f(difference_profile(DegreeSequence(star)), f);
    CHECK(compare_values(p, s) == Ordering::Tie);
  }

  // (1,1,3,3) vs (1,1,2,3) at f = log_2(3/2): both exactly 6
  const double f = std::log(1.5) / std::log(2.0);
  const IndexValue a = sigma_t_f(difference_profile(DegreeSequence({3, 3, 1, 1})), f);
  const IndexValue b = sigma_t_f(difference_profile(DegreeSequence({3, 2, 1, 1})), f);
  CHECK(compare_values(a, b) == Ordering::Tie);
}

TEST_CASE("power table exact paths agree with the integer indices") {
  for (int n = 2; n <= 6; ++n) {
    PowerTable t1(1.0, n - 1);
    PowerTable t2(2.0, n - 1);
    CHECK(t1.exact());
    CHECK(t2.exact());
    for (const auto& v : all_nonincreasing(n, 0, n - 1)) {
      const DegreeSequence seq(v);
      const auto p = difference_profile(seq);
      CHECK(t1.value(p.counts) == static_cast<double>(irr_t(seq)));
      CHECK(t2.value(p.counts) == static_cast<double>(sigma_t_classic(seq)));
    }
  }
}

TEST_CASE("sequences with spread wider than n-1 still profile correctly") {
  const std::vector<int> wide{9, 0};
  const auto p = difference_profile(DegreeSequence(wide));
  REQUIRE(p.counts.size() == 10);
  CHECK(p.counts[9] == 1);
  CHECK(sigma_t_f(p, 2.0).value == 81.0);
}
