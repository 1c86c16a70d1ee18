#include "eseries/bigreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "eseries/errors.hpp"
#include "eseries/rational.hpp"

namespace eseries {

long decimal_digits_for_bits(long precision_bits) {
  // log10(2) = 0.30103..., truncated
  return std::max(1L, static_cast<long>(static_cast<double>(precision_bits) * 0.30102999566398));
}

long BigReal::checked_prec(long precision_bits) {
  if (precision_bits < kMinPrecisionBits)
    throw PrecisionError("precision_bits must be >= 64, got " + std::to_string(precision_bits));
  return precision_bits;
}

BigReal::BigReal(long precision_bits, bool) {
  mpfr_init2(v_, checked_prec(precision_bits));
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::zero(long precision_bits) {
  BigReal r(precision_bits, true);
  mpfr_set_zero(r.v_, 1);
  return r;
}

BigReal BigReal::of(long value, long precision_bits) {
  BigReal r(precision_bits, true);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::of(double value, long precision_bits) {
  BigReal r(precision_bits, true);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::of(const mpz_class& value, long precision_bits) {
  BigReal r(precision_bits, true);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::of(const Rational& value, long precision_bits) {
  BigReal r(precision_bits, true);
  mpfr_set_q(r.v_, value.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(const std::string& decimal, long precision_bits) {
  BigReal r(precision_bits, true);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal: cannot parse \"" + decimal + "\"");
  return r;
}

BigReal BigReal::pi(long precision_bits) {
  BigReal r(precision_bits, true);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::round_to(long precision_bits) const {
  BigReal r(precision_bits, true);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigReal::str_sci(long digits) const {
  digits = std::max(1L, digits);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigReal BigReal::mul_2si(long k) const {
  BigReal r(precision(), true);
  mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(precision(), true);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
long joint_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

#define ESERIES_BINOP(op, fn)                                     \
  BigReal operator op(const BigReal& a, const BigReal& b) {       \
    BigReal r = BigReal::zero(joint_prec(a, b));                  \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                     \
    return r;                                                     \
  }

ESERIES_BINOP(+, mpfr_add)
ESERIES_BINOP(-, mpfr_sub)
ESERIES_BINOP(*, mpfr_mul)
ESERIES_BINOP(/, mpfr_div)
#undef ESERIES_BINOP

BigReal operator+(const BigReal& a, long b) {
  BigReal r = BigReal::zero(a.precision());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r = BigReal::zero(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r = BigReal::zero(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r = BigReal::zero(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r = BigReal::zero(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r = BigReal::zero(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& b) {
  if (precision() < b.precision()) *this = round_to(b.precision());
  mpfr_add(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& b) {
  if (precision() < b.precision()) *this = round_to(b.precision());
  mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& b) {
  if (precision() < b.precision()) *this = round_to(b.precision());
  mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

#define ESERIES_UNFUN(name, fn)                  \
  BigReal name(const BigReal& x) {               \
    BigReal r = BigReal::zero(x.precision());    \
    fn(r.raw(), x.raw(), MPFR_RNDN);             \
    return r;                                    \
  }

ESERIES_UNFUN(abs, mpfr_abs)
ESERIES_UNFUN(sqrt, mpfr_sqrt)
ESERIES_UNFUN(exp, mpfr_exp)
ESERIES_UNFUN(log, mpfr_log)
ESERIES_UNFUN(log2, mpfr_log2)
ESERIES_UNFUN(log10, mpfr_log10)
#undef ESERIES_UNFUN

BigReal floor(const BigReal& x) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal pow(const BigReal& x, long e) {
  BigReal r = BigReal::zero(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r = BigReal::zero(joint_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r = BigReal::zero(joint_prec(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

std::pair<BigReal, BigReal> sin_cos(const BigReal& angle) {
  BigReal s = BigReal::zero(angle.precision());
  BigReal c = BigReal::zero(angle.precision());
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return {std::move(s), std::move(c)};
}

}  // namespace eseries
