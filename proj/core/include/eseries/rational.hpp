#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace eseries {

// Exact arbitrary-precision fraction, always kept canonical:
// gcd(|numerator|, denominator) = 1 and denominator >= 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);

  // Adopts an mpq value; canonicalizes in case the caller assembled it raw.
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int signum() const { return sgn(q_); }
  Rational abs() const;

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // mpq_class arithmetic preserves canonical form, so no re-canonicalization.
  static Rational wrap(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

}  // namespace eseries
