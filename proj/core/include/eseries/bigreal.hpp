#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace eseries {

class Rational;

// Smallest precision the library accepts. Everything downstream assumes at
// least this many bits, so the floor is enforced at construction.
inline constexpr long kMinPrecisionBits = 64;

// Decimal digits faithfully representable at the given precision.
long decimal_digits_for_bits(long precision_bits);

// Floating value with an explicit precision in bits. Arithmetic results
// carry the max of the operand precisions; rounding is to nearest
// throughout, so precision is never silently lost.
class BigReal {
 public:
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal zero(long precision_bits);
  static BigReal of(long value, long precision_bits);
  static BigReal of(double value, long precision_bits);
  static BigReal of(const mpz_class& value, long precision_bits);
  static BigReal of(const Rational& value, long precision_bits);
  // Parses a decimal string such as "0.5" or "1e-25".
  static BigReal parse(const std::string& decimal, long precision_bits);
  static BigReal pi(long precision_bits);

  long precision() const { return mpfr_get_prec(v_); }
  // Value rounded (or extended) to a new precision.
  BigReal round_to(long precision_bits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string str_sci(long digits) const;

  // Exact scaling by 2^k; precision unchanged.
  BigReal mul_2si(long k) const;

  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);

  BigReal& operator+=(const BigReal& b);
  BigReal& operator-=(const BigReal& b);
  BigReal& operator*=(const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_lessgreater_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal log2(const BigReal& x);
  friend BigReal log10(const BigReal& x);
  friend BigReal floor(const BigReal& x);
  friend BigReal pow(const BigReal& x, long e);
  friend BigReal atan2(const BigReal& y, const BigReal& x);
  friend BigReal hypot(const BigReal& x, const BigReal& y);
  // sin and cos of the same angle in one reduction.
  friend std::pair<BigReal, BigReal> sin_cos(const BigReal& angle);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  explicit BigReal(long precision_bits, bool);  // uninitialized value (NaN)
  static long checked_prec(long precision_bits);

  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal pow(const BigReal& x, long e);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
std::pair<BigReal, BigReal> sin_cos(const BigReal& angle);

}  // namespace eseries
