#pragma once

#include <string>

#include "eseries/bigreal.hpp"
#include "eseries/coefficients.hpp"

namespace eseries {

// e from the factorial series sum_{k<=K} 1/k!, with K chosen so the tail
// 2/(K+1)! is below 2^-(precision_bits+8). Independent of mpfr_exp; used
// as the reference value for e everywhere in the library.
BigReal compute_e(long precision_bits);

// g(x) = (1 + 1/x)^x evaluated as exp(x*ln(1+1/x)). Requires x > 1.
BigReal g_direct(const BigReal& x, long precision_bits);

// e * sum_{j=0..J} a_j x^-j. Requires x > 1 and a table holding a_0..a_J.
BigReal g_partial_sum(const BigReal& x, const CoefficientTable& table, long J,
                      long precision_bits);

// Result of the series-based e estimator.
struct EEstimate {
  BigReal value;       // g(x) / sum_{j<=J} a_j x^-j
  long x_used;         // the power of two used for x
  long terms_used;     // number of series terms, J + 1
  BigReal tail_bound;  // |value| * x^-(J+1) / (1 - 1/x), empirically validated

  // floor(-log10(tail_bound / |value|)): decimal digits the tail model
  // claims correct.
  long claimed_digits() const;
};

// Estimates e as g(x) divided by the truncated series. x must be a power
// of two >= 2 so x^-j is an exact binary shift. The table must extend to
// J + 8 and the prefix |a_j| <= 1 (1 <= j <= J+8) is checked; violation
// throws PrefixBoundError since the tail model depends on it.
EEstimate estimate_e(long x, long J, const CoefficientTable& table,
                     long precision_bits);

}  // namespace eseries
