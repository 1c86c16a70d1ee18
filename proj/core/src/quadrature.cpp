#include "eseries/quadrature.hpp"

#include <string>

#include "eseries/errors.hpp"

namespace eseries {

void ContourSpec::validate() const {
  if (!(radius > BigReal::zero(64)) || !(radius < BigReal::of(1L, 64))) {
    throw DomainError("ContourSpec: radius must lie in (0, 1)");
  }
  if (nodes < 4 || nodes % 2 != 0) {
    throw DomainError("ContourSpec: nodes must be even and >= 4");
  }
  if (precision_bits < kMinPrecisionBits) {
    throw DomainError("ContourSpec: precision_bits must be >= " + std::to_string(kMinPrecisionBits));
  }
}

BigComplex f_eval(const BigComplex& z, long precision_bits) {
  if (z.is_real() && z.real() <= BigReal::of(-1L, 64)) {
    throw BranchCutError("f_eval: real z <= -1 lies on the branch cut");
  }
  const long wp = precision_bits + 32;
  const BigComplex zw = z.round_to(wp);

  // w(z) = ln(1+z)/z, extended by w(0) = 1. Below the threshold the power
  // series sum_{s>=0} (-1)^s z^s/(s+1) converges at 10+ bits per term and
  // avoids the 0/0 at the removable singularity.
  const BigReal small = BigReal::of(1L, wp).mul_2si(-10);
  BigComplex w = BigComplex::zero(wp);
  if (abs(zw) < small) {
    BigComplex zpow = BigComplex::of(BigReal::of(1L, wp));  // z^s
    const BigReal cutoff = BigReal::of(1L, wp).mul_2si(-(precision_bits + 16));
    for (long s = 0;; ++s) {
      const BigComplex term = zpow * (BigReal::of(1L, wp) / (s + 1));
      if (abs(term) < cutoff) break;
      w = (s % 2 == 0) ? w + term : w - term;
      zpow = zpow * zw;
    }
  } else {
    w = log(zw + 1L) / zw;
  }
  return exp(w).round_to(precision_bits);
}

CauchyResult cauchy_coefficient(long j, const ContourSpec& spec) {
  spec.validate();
  if (j < 0) throw DomainError("cauchy_coefficient: j must be >= 0");

  // The 1/r^j scaling amplifies node-level error by j*log2(1/r) bits, so
  // the working precision must clear that with headroom.
  const BigReal needed = BigReal::of(j, 64) * -log2(spec.radius.round_to(64)) + 64L;
  if (BigReal::of(spec.precision_bits, 64) < needed) {
    throw PrecisionError("cauchy_coefficient: precision_bits must be >= j*log2(1/r) + 64 ~= " +
                         needed.str_sci(4));
  }

  const long wp = spec.precision_bits + 32;
  const BigReal r = spec.radius.round_to(wp);
  const BigReal two_pi = BigReal::pi(wp).mul_2si(1);
  const long n = spec.nodes;

  BigComplex sum = BigComplex::zero(wp);
  for (long k = 0; k < n; ++k) {
    const BigReal theta = two_pi * k / n;
    auto [sin_t, cos_t] = sin_cos(theta);
    const BigComplex node(r * cos_t, r * sin_t);
    const BigComplex fz = f_eval(node, wp);
    // e^{-i j theta_k} has angle -2 pi (j k mod N) / N; reducing the index
    // exactly keeps the trig argument small.
    const long m = ((j % n) * (k % n)) % n;
    const BigReal phi = two_pi * m / n;
    auto [sin_p, cos_p] = sin_cos(phi);
    sum = sum + fz * BigComplex(cos_p, -sin_p);
  }

  CauchyResult out{
      (sum.real() / (BigReal::of(n, wp) * pow(r, j))).round_to(spec.precision_bits),
      (abs(sum.imag()) / n).round_to(spec.precision_bits),
      n,
  };
  return out;
}

CauchyResult adaptive_cauchy(long j, const BigReal& radius, const BigReal& tol,
                             long precision_bits, long max_nodes) {
  if (tol < BigReal::zero(64)) throw DomainError("adaptive_cauchy: tol must be >= 0");
  if (max_nodes < 64) throw DomainError("adaptive_cauchy: max_nodes must be >= 64");

  ContourSpec spec{radius, 32, precision_bits};
  CauchyResult prev = cauchy_coefficient(j, spec);
  // Deltas of the two most recent doublings, for the error report.
  BigReal delta_last = BigReal::zero(precision_bits);
  BigReal delta_before = BigReal::zero(precision_bits);
  long doublings = 0;

  for (long n = 64; n <= max_nodes; n *= 2) {
    spec.nodes = n;
    const CauchyResult cur = cauchy_coefficient(j, spec);
    delta_before = delta_last;
    delta_last = abs(cur.value - prev.value);
    ++doublings;
    if (delta_last < tol) return cur;
    prev = cur;
  }
  const std::string deltas = doublings >= 2
                                 ? delta_before.str_sci(6) + ", " + delta_last.str_sci(6)
                                 : delta_last.str_sci(6);
  throw ConvergenceError("adaptive_cauchy: no convergence below tol at N = " +
                         std::to_string(prev.nodes) + " (last deltas: " + deltas + ")");
}

}  // namespace eseries
