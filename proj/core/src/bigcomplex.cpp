#include "eseries/bigcomplex.hpp"

#include <utility>

namespace eseries {

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
  const long p = std::max(re_.precision(), im_.precision());
  if (re_.precision() != p) re_ = re_.round_to(p);
  if (im_.precision() != p) im_ = im_.round_to(p);
}

BigComplex BigComplex::zero(long precision_bits) {
  return {BigReal::zero(precision_bits), BigReal::zero(precision_bits)};
}

BigComplex BigComplex::round_to(long precision_bits) const {
  return BigComplex(re_.round_to(precision_bits), im_.round_to(precision_bits));
}

BigComplex BigComplex::of(const BigReal& re) {
  return {re, BigReal::zero(re.precision())};
}

BigComplex BigComplex::of(long re, long im, long precision_bits) {
  return {BigReal::of(re, precision_bits), BigReal::of(im, precision_bits)};
}

BigComplex BigComplex::from_polar(const BigReal& radius, const BigReal& angle) {
  auto [s, c] = sin_cos(angle.round_to(std::max(radius.precision(), angle.precision())));
  return {radius * c, radius * s};
}

BigComplex BigComplex::operator-() const { return {-re_, -im_}; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

BigComplex operator*(const BigComplex& a, const BigReal& s) {
  return {a.re_ * s, a.im_ * s};
}

BigComplex operator+(const BigComplex& a, long b) {
  return {a.re_ + b, a.im_};
}

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.real());
  auto [s, c] = sin_cos(z.imag());
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  return {log(abs(z)), atan2(z.imag(), z.real())};
}

std::string BigComplex::str(long digits) const {
  std::string s = re_.str_sci(digits);
  s += im_.sign() < 0 ? " - " : " + ";
  s += abs(im_).str_sci(digits);
  s += "i";
  return s;
}

}  // namespace eseries
