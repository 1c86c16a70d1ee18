#include "eseries/asymptotics.hpp"

#include <algorithm>

#include "eseries/errors.hpp"
#include "eseries/quadrature.hpp"
#include "eseries/series.hpp"

namespace eseries {

Rational leading_estimate(long j) {
  if (j < 1) throw DomainError("leading_estimate: j must be >= 1 (1/j undefined at 0)");
  const long sign = (j % 2 == 0) ? 1 : -1;
  return Rational(sign * (j + 1), j);
}

namespace {

// Shared by eta and residual_sweep so the sweep can hoist the e computation;
// e_w must carry precision wp = precision_bits + 32.
ResidualRecord eta_impl(long j, const CoefficientTable& table, const BigReal& e_w,
                        long precision_bits) {
  const long wp = precision_bits + 32;
  const BigReal c = e_w * table.entry_real(j, wp);
  const BigReal lead = BigReal::of(leading_estimate(j), wp);
  const BigReal eta_w = c - lead;

  ResidualRecord rec{j, eta_w.round_to(precision_bits), std::nullopt};
  if (j > 1) {
    const BigReal jw = BigReal::of(j, wp);
    rec.scaled = (abs(eta_w) * jw * jw / log(jw)).round_to(precision_bits);
  }
  return rec;
}

}  // namespace

ResidualRecord eta(long j, const CoefficientTable& table, long precision_bits) {
  if (j < 1) throw DomainError("eta: j must be >= 1");
  return eta_impl(j, table, compute_e(precision_bits + 32), precision_bits);
}

SweepSummary residual_sweep(long j_min, long j_max, const CoefficientTable& table,
                            long precision_bits) {
  if (j_min < 2 || j_min > j_max) {
    throw DomainError("residual_sweep: need 2 <= j_min <= j_max");
  }
  if (j_max > table.max_index()) {
    throw TableRangeError("residual_sweep: table extends only to " +
                          std::to_string(table.max_index()));
  }

  const BigReal e_w = compute_e(precision_bits + 32);
  SweepSummary out{{}, BigReal::zero(precision_bits), BigReal::zero(precision_bits)};
  out.records.reserve(static_cast<size_t>(j_max - j_min + 1));
  for (long j = j_min; j <= j_max; ++j) {
    out.records.push_back(eta_impl(j, table, e_w, precision_bits));
  }

  std::vector<BigReal> scaled;
  scaled.reserve(out.records.size());
  for (const ResidualRecord& rec : out.records) scaled.push_back(*rec.scaled);
  std::sort(scaled.begin(), scaled.end());
  out.max_scaled = scaled.back();
  const size_t n = scaled.size();
  out.median_scaled = (n % 2 == 1)
                          ? scaled[n / 2]
                          : ((scaled[n / 2 - 1] + scaled[n / 2]) / 2L).round_to(precision_bits);
  return out;
}

BigComplex r_function(const BigComplex& z, long precision_bits) {
  if (z.is_real() && z.real() <= BigReal::of(-1L, 64)) {
    throw BranchCutError("r_function: real z <= -1 lies on the branch cut");
  }
  const long wp = precision_bits + 32;
  const BigComplex zw = z.round_to(wp);
  const BigComplex one_plus = zw + 1L;
  const BigComplex one = BigComplex::of(BigReal::of(1L, wp));
  return (f_eval(zw, wp) - one / one_plus + log(one_plus)).round_to(precision_bits);
}

}  // namespace eseries
