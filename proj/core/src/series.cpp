#include "eseries/series.hpp"

#include <stdexcept>
#include <string>

#include "eseries/errors.hpp"

namespace eseries {

BigReal compute_e(long precision_bits) {
  // Smallest K with (K+1)! > 2^(precision_bits+9), so 2/(K+1)! < 2^-(p+8).
  const long target_bits = precision_bits + 9;
  mpz_class fact(1);
  long K = 0;
  while (mpz_sizeinbase(fact.get_mpz_t(), 2) <= static_cast<size_t>(target_bits)) {
    ++K;
    fact *= K;
  }
  // fact = K! >= 2^(target_bits), so the tail past K is < 2^-(p+8).
  // sum_{k=0..K} 1/k! = A / K! with A = sum_{k=0..K} K!/k!.
  mpz_class acc(1);  // K!/K!
  mpz_class term(1);
  for (long k = K; k >= 1; --k) {
    term *= k;  // K!/(k-1)!
    acc += term;
  }
  const long wp = precision_bits + 8;
  BigReal e = BigReal::of(acc, wp) / BigReal::of(fact, wp);
  return e.round_to(precision_bits);
}

BigReal g_direct(const BigReal& x, long precision_bits) {
  if (!(x > BigReal::of(1L, 64)))
    throw DomainError("g_direct: requires x > 1");
  const long wp = precision_bits + 32;
  BigReal xw = x.round_to(wp);
  BigReal base = 1L + 1L / xw;
  return exp(xw * log(base)).round_to(precision_bits);
}

BigReal g_partial_sum(const BigReal& x, const CoefficientTable& table, long J,
                      long precision_bits) {
  if (!(x > BigReal::of(1L, 64)))
    throw DomainError("g_partial_sum: requires x > 1");
  if (J < 0) throw std::invalid_argument("g_partial_sum: J must be >= 0");
  if (J > table.max_index())
    throw TableRangeError("g_partial_sum: table holds a_0..a_" +
                          std::to_string(table.max_index()) + ", need a_" +
                          std::to_string(J));
  const long wp = precision_bits + 32;
  BigReal xw = x.round_to(wp);
  // Horner over the raw integer numerators, one shared denominator.
  BigReal s = BigReal::of(table.raw_numerator(J), wp);
  for (long j = J - 1; j >= 0; --j) {
    s = s / xw + BigReal::of(table.raw_numerator(j), wp);
  }
  s = s / BigReal::of(table.common_denominator(), wp);
  return (compute_e(wp) * s).round_to(precision_bits);
}

long EEstimate::claimed_digits() const {
  BigReal rel = tail_bound / abs(value);
  return static_cast<long>(floor(-log10(rel)).to_double());
}

EEstimate estimate_e(long x, long J, const CoefficientTable& table,
                     long precision_bits) {
  if (x < 2 || (x & (x - 1)) != 0)
    throw DomainError("estimate_e: x must be a power of two >= 2");
  if (J < 0) throw std::invalid_argument("estimate_e: J must be >= 0");
  const long prefix_end = J + 8;
  if (prefix_end > table.max_index())
    throw TableRangeError("estimate_e: table must extend to J + 8 = " +
                          std::to_string(prefix_end));
  for (long j = 1; j <= prefix_end; ++j) {
    if (!table.abs_at_most_one(j))
      throw PrefixBoundError("estimate_e: |a_" + std::to_string(j) +
                             "| > 1 invalidates the tail model");
  }

  long m = 0;  // x = 2^m
  for (long v = x; v > 1; v >>= 1) ++m;

  // sum_{j<=J} a_j x^-j = [sum_j num_j 2^(m(J-j))] / (den * 2^(mJ)), exact.
  mpz_class acc(0), shifted;
  for (long j = 0; j <= J; ++j) {
    mpz_mul_2exp(shifted.get_mpz_t(), table.raw_numerator(j).get_mpz_t(),
                 static_cast<mp_bitcnt_t>(m * (J - j)));
    acc += shifted;
  }

  const long wp = precision_bits + 32;
  BigReal denom_sum =
      (BigReal::of(acc, wp) / BigReal::of(table.common_denominator(), wp))
          .mul_2si(-m * J);
  BigReal value = g_direct(BigReal::of(x, wp), wp) / denom_sum;

  // tail ~ M * x^-(J+1) / (1 - 1/x) * |value| with M = 1 from the prefix
  // check (the bound is empirically validated, not proven uniform).
  BigReal xw = BigReal::of(x, wp);
  BigReal tail = (abs(value).mul_2si(-m * (J + 1)) * xw) / (xw - 1L);

  return EEstimate{value.round_to(precision_bits), x, J + 1,
                   tail.round_to(precision_bits)};
}

}  // namespace eseries
