#pragma once

#include "eseries/bigreal.hpp"

namespace eseries {

// Complex value whose parts share one precision. Construction aligns the
// parts to the max of their precisions.
class BigComplex {
 public:
  BigComplex(BigReal re, BigReal im);

  static BigComplex zero(long precision_bits);
  static BigComplex of(const BigReal& re);
  static BigComplex of(long re, long im, long precision_bits);
  // radius * (cos(angle) + i sin(angle))
  static BigComplex from_polar(const BigReal& radius, const BigReal& angle);

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }
  long precision() const { return re_.precision(); }

  bool is_real() const { return im_.is_zero(); }

  // Both parts rounded (or extended) to a new precision.
  BigComplex round_to(long precision_bits) const;

  BigComplex operator-() const;
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& s);
  friend BigComplex operator+(const BigComplex& a, long b);

  friend BigComplex conj(const BigComplex& z);
  friend BigReal abs(const BigComplex& z);
  friend BigComplex exp(const BigComplex& z);
  // Principal branch: imaginary part in (-pi, pi].
  friend BigComplex log(const BigComplex& z);

  std::string str(long digits) const;

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);

}  // namespace eseries
