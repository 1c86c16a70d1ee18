#pragma once

#include <optional>
#include <vector>

#include "eseries/bigcomplex.hpp"
#include "eseries/bigreal.hpp"
#include "eseries/coefficients.hpp"
#include "eseries/rational.hpp"

namespace eseries {

// Remainder of the leading asymptotic approximation at index j:
// eta = c_j - (-1)^j (1 + 1/j), and the scaled residual |eta| j^2 / ln j
// whose boundedness witnesses the O(ln j / j^2) remainder order. The scaled
// field is absent at j = 1 (ln 1 = 0).
struct ResidualRecord {
  long j;
  BigReal eta;
  std::optional<BigReal> scaled;
};

// Leading term (-1)^j (1 + 1/j) of c_j, exact. Throws DomainError for j < 1.
Rational leading_estimate(long j);

// Residual record at index j. The table must extend to j (TableRangeError
// otherwise). Computed with 32 guard bits and rounded to precision_bits.
ResidualRecord eta(long j, const CoefficientTable& table, long precision_bits);

// Residual records for every j in [j_min, j_max] (requires 2 <= j_min so the
// scaled residual is defined throughout), with the max and median of the
// scaled values. Median of an even count is the mean of the two middle
// values.
struct SweepSummary {
  std::vector<ResidualRecord> records;
  BigReal max_scaled;
  BigReal median_scaled;
};
SweepSummary residual_sweep(long j_min, long j_max, const CoefficientTable& table,
                            long precision_bits);

// R(z) = f(z) - (1+z)^{-1} + ln(1+z), principal branch: the local remainder
// of f near the branch point z = -1, which behaves like
// [ln^2(1+z)/2 - ln(1+z)] (1+z) as z -> -1. Throws BranchCutError for real
// z <= -1.
BigComplex r_function(const BigComplex& z, long precision_bits);

}  // namespace eseries
