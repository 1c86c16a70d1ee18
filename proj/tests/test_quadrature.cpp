#include "eseries/quadrature.hpp"

#include "eseries/coefficients.hpp"
#include "eseries/errors.hpp"
#include "eseries/series.hpp"
#include "support.hpp"
#include "vendor/doctest.h"

using eseries::adaptive_cauchy;
using eseries::BigComplex;
using eseries::BigReal;
using eseries::cauchy_coefficient;
using eseries::CauchyResult;
using eseries::CoefficientTable;
using eseries::ContourSpec;
using eseries::f_eval;
using eseries::test::br;
using eseries::test::within;

namespace {

ContourSpec spec_of(const char* radius, long nodes, long bits) {
  return ContourSpec{br(radius, bits), nodes, bits};
}

}  // namespace

TEST_CASE("contour validation") {
  CHECK_NOTHROW(spec_of("0.5", 64, 256).validate());
  CHECK_THROWS_AS(spec_of("0", 64, 256).validate(), eseries::DomainError);
  CHECK_THROWS_AS(spec_of("1", 64, 256).validate(), eseries::DomainError);
  CHECK_THROWS_AS(spec_of("1.5", 64, 256).validate(), eseries::DomainError);
  CHECK_THROWS_AS(spec_of("-0.5", 64, 256).validate(), eseries::DomainError);
  CHECK_THROWS_AS(spec_of("0.5", 63, 256).validate(), eseries::DomainError);  // odd
  CHECK_THROWS_AS(spec_of("0.5", 2, 256).validate(), eseries::DomainError);   // too few
  // The radius itself must be built at a legal precision; only the contour's
  // stated working precision is under test here.
  CHECK_THROWS_AS((ContourSpec{br("0.5", 64), 64, 32}.validate()), eseries::DomainError);
}

TEST_CASE("f at distinguished points") {
  const long p = 192;
  SUBCASE("removable singularity: f(0) = e") {
    const BigComplex f0 = f_eval(BigComplex::of(BigReal::zero(p)), p);
    CHECK(within(f0.real(), eseries::compute_e(p), "1e-55"));
    CHECK(f0.imag().is_zero());
  }
  SUBCASE("rational points") {
    CHECK(within(f_eval(BigComplex::of(br("0.5", p)), p).real(), br("2.25", p), "1e-55"));
    CHECK(within(f_eval(BigComplex::of(br("-0.5", p)), p).real(), BigReal::of(4L, p), "1e-55"));
  }
  SUBCASE("the series path agrees with the direct formula") {
    // Just inside the 2^-10 threshold vs just outside: f must be seamless.
    const BigReal lo = BigReal::of(1L, p).mul_2si(-11);
    const BigReal hi = BigReal::of(1L, p).mul_2si(-9);
    for (const BigReal& t : {lo, hi}) {
      const BigComplex z(t, t);  // off-axis to exercise complex arithmetic
      const BigComplex f = f_eval(z, p);
      const BigComplex direct = exp(log(z + 1L) / z);
      CHECK(within(f.real(), direct.real(), "1e-50"));
      CHECK(within(f.imag(), direct.imag(), "1e-50"));
    }
  }
  SUBCASE("conjugate symmetry") {
    const BigComplex z(br("0.3", p), br("0.4", p));
    const BigComplex a = f_eval(z, p);
    const BigComplex b = f_eval(conj(z), p);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == -b.imag());
  }
  SUBCASE("branch cut is rejected, points near it are fine") {
    CHECK_THROWS_AS(f_eval(BigComplex::of(-1L, 0L, p), p), eseries::BranchCutError);
    CHECK_THROWS_AS(f_eval(BigComplex::of(-5L, 0L, p), p), eseries::BranchCutError);
    CHECK_NOTHROW(f_eval(BigComplex(br("-2", p), br("1e-10", p)), p));
    CHECK_NOTHROW(f_eval(BigComplex::of(br("-0.99", p)), p));
  }
}

TEST_CASE("trapezoid rule recovers the first coefficients") {
  CoefficientTable t;
  t.extend(10);
  const long p = 256;

  SUBCASE("j = 0 at N = 128 lands on e far below 1e-20") {
    const CauchyResult r = cauchy_coefficient(0, spec_of("0.5", 128, p));
    CHECK(within(r.value, eseries::compute_e(p), "1e-20"));
    CHECK(within(r.value, eseries::compute_e(p), "1e-35"));
    CHECK(r.im_residual < br("1e-20", p));
  }
  SUBCASE("j = 0 at N = 64 is limited by aliasing to ~5.5e-20") {
    // The first neglected alias term is c_64 / 2^64; N = 64 therefore
    // cannot reach 1e-20 at r = 1/2, which is why tighter checks use 128.
    const CauchyResult r = cauchy_coefficient(0, spec_of("0.5", 64, p));
    const BigReal err = abs(r.value - eseries::compute_e(p));
    CHECK(err < br("1e-19", p));
    t.extend(128);
    const BigReal alias = t.coefficient_c(64, p).mul_2si(-64);
    CHECK(within(r.value, eseries::compute_e(p) + alias, "1e-37"));
  }
  SUBCASE("j = 1 and j = 10 against the exact table") {
    const CauchyResult r1 = cauchy_coefficient(1, spec_of("0.5", 256, p));
    CHECK(within(r1.value, t.coefficient_c(1, p), "1e-20"));
    const CauchyResult r10 = cauchy_coefficient(10, spec_of("0.5", 256, p));
    CHECK(within(r10.value, t.coefficient_c(10, p), "1e-15"));
  }
}

TEST_CASE("identical contours give bit-identical results") {
  const CauchyResult a = cauchy_coefficient(3, spec_of("0.5", 64, 192));
  const CauchyResult b = cauchy_coefficient(3, spec_of("0.5", 64, 192));
  CHECK(a.value == b.value);
  CHECK(a.value.str_sci(50) == b.value.str_sci(50));
  CHECK(a.im_residual == b.im_residual);
}

TEST_CASE("precision guard against 1/r^j amplification") {
  // r = 1/2 costs one bit per index: j = 50 needs at least 114 bits.
  CHECK_THROWS_AS(cauchy_coefficient(50, spec_of("0.5", 64, 100)), eseries::PrecisionError);
  CHECK_NOTHROW(cauchy_coefficient(50, spec_of("0.5", 64, 128)));
  CHECK_THROWS_AS(cauchy_coefficient(-1, spec_of("0.5", 64, 128)), eseries::DomainError);
}

TEST_CASE("adaptive refinement") {
  const long p = 256;
  SUBCASE("converges quickly for r = 1/2") {
    const CauchyResult r = adaptive_cauchy(0, br("0.5", p), br("1e-30", p), p);
    CHECK(r.nodes <= (1L << 12));
    CHECK(within(r.value, eseries::compute_e(p), "1e-30"));
    // The returned value is exactly the fixed-N evaluation at the final N.
    const CauchyResult direct = cauchy_coefficient(0, ContourSpec{br("0.5", p), r.nodes, p});
    CHECK(r.value == direct.value);
  }
  SUBCASE("a contour closer to the singularity needs more nodes") {
    const CauchyResult near = adaptive_cauchy(5, br("0.9", p), br("1e-20", p), p);
    const CauchyResult far = adaptive_cauchy(5, br("0.5", p), br("1e-20", p), p);
    CHECK(near.nodes > far.nodes);
    CHECK(within(near.value, far.value, "1e-18"));
  }
  SUBCASE("unreachable tolerance reports non-convergence at the cap") {
    CHECK_THROWS_AS(adaptive_cauchy(0, br("0.5", p), BigReal::zero(p), p, 256),
                    eseries::ConvergenceError);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(adaptive_cauchy(0, br("0.5", p), br("-1e-10", p), p), eseries::DomainError);
    CHECK_THROWS_AS(adaptive_cauchy(0, br("0.5", p), br("1e-10", p), p, 32), eseries::DomainError);
    CHECK_THROWS_AS(adaptive_cauchy(0, br("1.5", p), br("1e-10", p), p), eseries::DomainError);
  }
}

TEST_CASE("the estimate does not depend on the contour radius") {
  CoefficientTable t;
  t.extend(8);
  const long p = 256;
  for (long j : {0L, 3L, 8L}) {
    const CauchyResult a = adaptive_cauchy(j, br("0.4", p), br("1e-22", p), p);
    const CauchyResult b = adaptive_cauchy(j, br("0.6", p), br("1e-22", p), p);
    CHECK(within(a.value, b.value, "1e-18"));
    CHECK(within(a.value, t.coefficient_c(j, p), "1e-18"));
  }
}
