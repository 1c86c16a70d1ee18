#pragma once

#include <gmpxx.h>

#include <vector>

#include "eseries/bigreal.hpp"
#include "eseries/rational.hpp"

namespace eseries {

// Convolution weight d_j = (-1)^(j+1) * (j+1)/(j+2).
Rational d_weight(long j);

// Exact table of the rational factors a_j = c_j / e of the expansion
// coefficients of (1 + 1/x)^x. Seeded with a_0 = 1 and grown by the
// recursion a_{j+1} = (1/(j+1)) * sum_{l=0..j} a_l * d_{j-l}.
//
// Internally the prefix is held as signed integer numerators over one
// shared positive denominator; entries are produced in canonical form on
// access. Extension is incremental: growing a table never recomputes or
// alters existing entries, and extending in several steps yields exactly
// the same state as extending in one.
//
// A completed table is immutable for readers; all accessors are const and
// safe to call concurrently once extension is done.
class CoefficientTable {
 public:
  CoefficientTable();

  long max_index() const { return static_cast<long>(num_.size()) - 1; }

  // Grows the table so entries 0..new_max exist. No-op if already there.
  void extend(long new_max);

  // Canonical a_j. Throws TableRangeError for j > max_index().
  Rational entry(long j) const;

  // Sign of a_j without canonicalization: +1 or -1 (no a_j is zero).
  int sign(long j) const;

  // c_j = e * a_j, rounded to precision_bits; e is taken with 32 guard
  // bits from the factorial series.
  BigReal coefficient_c(long j, long precision_bits) const;

  // a_j rounded to precision_bits (no factor of e).
  BigReal entry_real(long j, long precision_bits) const;

  // True iff |a_j| <= 1.
  bool abs_at_most_one(long j) const;

  // Raw exact representation: a_j = raw_numerator(j) / common_denominator().
  // Not canonical individually; the quotient is exact.
  const mpz_class& raw_numerator(long j) const;
  const mpz_class& common_denominator() const { return den_; }

 private:
  void check_index(long j) const;

  std::vector<mpz_class> num_;  // num_[j] / den_ == a_j, sign carried by num_
  mpz_class den_;               // shared positive denominator
};

}  // namespace eseries
