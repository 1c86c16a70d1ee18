#pragma once

#include <string>

#include "eseries/bigreal.hpp"

namespace eseries::test {

// Parse a decimal literal at a generous fixed precision.
inline BigReal br(const std::string& decimal, long precision_bits = 256) {
  return BigReal::parse(decimal, precision_bits);
}

// |a - b| < tol, with tol given as a decimal literal such as "1e-30".
inline bool within(const BigReal& a, const BigReal& b, const std::string& tol) {
  return abs(a - b) < br(tol, std::max(a.precision(), b.precision()));
}

inline bool within(const BigReal& a, const std::string& b, const std::string& tol) {
  return within(a, br(b, a.precision() + 16), tol);
}

}  // namespace eseries::test
