#pragma once

#include "eseries/bigcomplex.hpp"
#include "eseries/bigreal.hpp"

namespace eseries {

// Circle of radius r about the origin, sampled at N equally spaced nodes,
// with the working precision for the node evaluations.
struct ContourSpec {
  BigReal radius;
  long nodes;
  long precision_bits;

  // Throws DomainError unless 0 < r < 1 and N is even and >= 4.
  void validate() const;
};

// f(z) = (1+z)^{1/z} on the disc minus the cut (-infinity, -1], principal
// branch. Near the removable singularity (|z| < 2^-10) the exponent
// ln(1+z)/z is evaluated by its power series, so f(0) = e exactly by this
// path. Throws BranchCutError for real z <= -1.
BigComplex f_eval(const BigComplex& z, long precision_bits);

struct CauchyResult {
  BigReal value;        // real part of the trapezoid sum, scaled by 1/(N r^j)
  BigReal im_residual;  // |imaginary part of the raw node sum| / N, diagnostic
  long nodes;
};

// Trapezoidal discretization of the Cauchy coefficient integral
//   c_j = (1/(2 pi i)) \oint f(z) / z^{j+1} dz
// on the circle of spec.radius: value = (1/(N r^j)) sum_k Re[f(r e^{i th_k})
// e^{-i j th_k}] with th_k = 2 pi k / N, summed in ascending k (the order is
// part of the contract: identical specs give bit-identical results). The
// error of the result is the aliasing sum_{s>=1} c_{j+sN} r^{sN}, which
// decays geometrically in N.
//
// Throws PrecisionError when spec.precision_bits < j*log2(1/r) + 64: the
// 1/r^j scaling amplifies absolute error by that many bits.
CauchyResult cauchy_coefficient(long j, const ContourSpec& spec);

// Doubles N starting at 32 until two successive results differ by less than
// tol, returning the last result (value and N used). Throws ConvergenceError
// at the node cap, reporting the last two deltas. The cap defaults to 2^20.
CauchyResult adaptive_cauchy(long j, const BigReal& radius, const BigReal& tol,
                             long precision_bits, long max_nodes = 1L << 20);

}  // namespace eseries
