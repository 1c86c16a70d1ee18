#include "eseries/coefficients.hpp"

#include "eseries/errors.hpp"
#include "eseries/series.hpp"
#include "reference_recursion.hpp"
#include "support.hpp"
#include "vendor/doctest.h"

using eseries::BigReal;
using eseries::CoefficientTable;
using eseries::d_weight;
using eseries::Rational;
using eseries::test::within;

TEST_CASE("convolution weights") {
  CHECK(d_weight(0) == Rational(-1, 2));
  CHECK(d_weight(1) == Rational(2, 3));
  CHECK(d_weight(2) == Rational(-3, 4));
  CHECK(d_weight(7) == Rational(8, 9));
  CHECK_THROWS_AS(d_weight(-1), std::invalid_argument);
}

TEST_CASE("table starts at a_0 = 1 and extending to 0 changes nothing") {
  CoefficientTable t;
  CHECK(t.max_index() == 0);
  CHECK(t.entry(0) == Rational(1));
  t.extend(0);
  CHECK(t.max_index() == 0);
  CHECK(t.entry(0) == Rational(1));
}

TEST_CASE("first entries match the partition-sum oracle values") {
  CoefficientTable t;
  t.extend(8);
  CHECK(t.entry(1) == Rational(-1, 2));
  CHECK(t.entry(2) == Rational(11, 24));
  CHECK(t.entry(3) == Rational(-7, 16));
  CHECK(t.entry(4) == Rational(2447, 5760));
  CHECK(t.entry(5) == Rational(-959, 2304));
  CHECK(t.entry(6) == Rational(238043, 580608));
  CHECK(t.entry(7) == Rational(-67223, 165888));
  CHECK(t.entry(8) == Rational(mpz_class(559440199), mpz_class(1393459200)));
}

TEST_CASE("table agrees with a naive per-entry mpq recursion") {
  // Third implementation of the same recursion, kept deliberately simple;
  // guards the shared-denominator bookkeeping of the production table.
  const long kMax = 160;
  CoefficientTable t;
  t.extend(kMax);
  const auto naive = eseries::test::naive_coefficients(kMax);
  for (long j = 0; j <= kMax; ++j) {
    const Rational a = t.entry(j);
    CHECK(a.num() == naive[static_cast<size_t>(j)].get_num());
    CHECK(a.den() == naive[static_cast<size_t>(j)].get_den());
  }
}

TEST_CASE("staged extension equals one-shot extension") {
  CoefficientTable staged;
  staged.extend(50);
  staged.extend(120);
  CoefficientTable oneshot;
  oneshot.extend(120);
  for (long j = 0; j <= 120; ++j) CHECK(staged.entry(j) == oneshot.entry(j));
  CHECK(staged.common_denominator() == oneshot.common_denominator());
}

TEST_CASE("signs alternate") {
  CoefficientTable t;
  t.extend(400);
  for (long j = 0; j <= 400; ++j) {
    const int expected = (j % 2 == 0) ? 1 : -1;
    CHECK(t.sign(j) == expected);
    CHECK(t.entry(j).signum() == expected);
  }
}

TEST_CASE("raw representation reproduces the canonical entries exactly") {
  CoefficientTable t;
  t.extend(60);
  for (long j = 0; j <= 60; ++j) {
    CHECK(Rational(t.raw_numerator(j), t.common_denominator()) == t.entry(j));
  }
}

TEST_CASE("coefficient magnitudes stay at most one past the seed") {
  CoefficientTable t;
  t.extend(200);
  for (long j = 1; j <= 200; ++j) CHECK(t.abs_at_most_one(j));
}

TEST_CASE("c_j rendering multiplies by e") {
  CoefficientTable t;
  t.extend(2);
  SUBCASE("c_0 is e itself") {
    CHECK(within(t.coefficient_c(0, 128), eseries::compute_e(128), "1e-36"));
  }
  SUBCASE("c_1 and c_2 match independently derived decimals") {
    CHECK(within(t.coefficient_c(1, 128), "-1.359140914229522617680143735676331248879", "1e-35"));
    CHECK(within(t.coefficient_c(2, 128), "1.245879171377062399540131757703303644805", "1e-35"));
  }
  SUBCASE("requested precision is honored") {
    CHECK(t.coefficient_c(2, 192).precision() == 192);
    CHECK(t.entry_real(2, 128).precision() == 128);
    CHECK(within(t.entry_real(2, 128), BigReal::of(Rational(11, 24), 128), "1e-36"));
  }
}

TEST_CASE("out-of-range access is reported") {
  CoefficientTable t;
  t.extend(5);
  CHECK_THROWS_AS(t.entry(6), eseries::TableRangeError);
  CHECK_THROWS_AS(t.coefficient_c(6, 128), eseries::TableRangeError);
  CHECK_THROWS_AS(t.entry(-1), std::invalid_argument);
  CHECK_THROWS_AS(t.extend(-3), std::invalid_argument);
}
