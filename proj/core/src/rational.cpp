#include "eseries/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace eseries {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rational Rational::abs() const {
  return signum() < 0 ? -*this : *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.signum() == 0) throw std::invalid_argument("Rational: division by zero");
  return Rational::wrap(a.q_ / b.q_);
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace eseries
