#include "eseries/coefficients.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "eseries/errors.hpp"
#include "eseries/series.hpp"

namespace eseries {

Rational d_weight(long j) {
  if (j < 0) throw std::invalid_argument("d_weight: j must be >= 0");
  const long sign = (j % 2 == 0) ? -1 : 1;
  return Rational(sign * (j + 1), j + 2);
}

CoefficientTable::CoefficientTable() : den_(1) {
  num_.emplace_back(1);  // a_0 = 1
}

void CoefficientTable::check_index(long j) const {
  if (j < 0) throw std::invalid_argument("coefficient index must be >= 0");
  if (j > max_index())
    throw TableRangeError("table holds a_0..a_" + std::to_string(max_index()) +
                          ", requested a_" + std::to_string(j));
}

// One extension step evaluates T = sum_{l=0..j} a_l * d_{j-l} exactly and
// sets a_{j+1} = T/(j+1). The terms a_l * d_{j-l} all share the sign
// (-1)^(j+1), and as fractions over den_ they differ only by the small
// factor (k+1)/(k+2) with k = j-l. Summing them pairwise over a balanced
// tree keeps every cross-multiplier at the small lcm of a few of those
// k+2 values instead of the full lcm(2..j+2), which is what makes the
// exact build of a long prefix affordable.
void CoefficientTable::extend(long new_max) {
  if (new_max < 0) throw std::invalid_argument("extend: new_max must be >= 0");
  if (new_max <= max_index()) return;

  std::vector<mpz_class> tnum(new_max + 1);
  std::vector<mpz_class> tden(new_max + 1);
  mpz_class g, r1, r2, t;

  for (long j = max_index(); j < new_max; ++j) {
    // leaves: a_l * d_{j-l} = [num_[l] * s*(k+1)] / [den_ * (k+2)], k = j-l
    for (long l = 0; l <= j; ++l) {
      const long k = j - l;
      const long w = (k % 2 == 0) ? -(k + 1) : (k + 1);
      mpz_mul_si(tnum[l].get_mpz_t(), num_[l].get_mpz_t(), w);
      tden[l] = k + 2;
    }

    // fold pairs until a single fraction remains; den_ is factored out
    long width = j + 1;
    while (width > 1) {
      const long half = width / 2;
      for (long i = 0; i < half; ++i) {
        mpz_class& na = tnum[2 * i];
        mpz_class& nb = tnum[2 * i + 1];
        mpz_class& da = tden[2 * i];
        mpz_class& db = tden[2 * i + 1];
        mpz_gcd(g.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
        mpz_divexact(r1.get_mpz_t(), db.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r2.get_mpz_t(), da.get_mpz_t(), g.get_mpz_t());
        // (na*r1 + nb*r2) / (da*r1)
        mpz_mul(t.get_mpz_t(), nb.get_mpz_t(), r2.get_mpz_t());
        mpz_mul(na.get_mpz_t(), na.get_mpz_t(), r1.get_mpz_t());
        mpz_add(na.get_mpz_t(), na.get_mpz_t(), t.get_mpz_t());
        mpz_mul(da.get_mpz_t(), da.get_mpz_t(), r1.get_mpz_t());
        if (i != 2 * i) {
          mpz_swap(tnum[i].get_mpz_t(), na.get_mpz_t());
          mpz_swap(tden[i].get_mpz_t(), da.get_mpz_t());
        }
      }
      if (width % 2 == 1) {
        mpz_swap(tnum[half].get_mpz_t(), tnum[width - 1].get_mpz_t());
        mpz_swap(tden[half].get_mpz_t(), tden[width - 1].get_mpz_t());
        width = half + 1;
      } else {
        width = half;
      }
    }

    // a_{j+1} = tnum[0] / (den_ * tden[0] * (j+1)); cancel the new factor
    mpz_class extra = tden[0] * (j + 1);
    mpz_gcd(g.get_mpz_t(), tnum[0].get_mpz_t(), extra.get_mpz_t());
    mpz_divexact(tnum[0].get_mpz_t(), tnum[0].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(extra.get_mpz_t(), extra.get_mpz_t(), g.get_mpz_t());
    if (extra != 1) {
      den_ *= extra;
      for (auto& n : num_) n *= extra;
    }
    num_.emplace_back();
    mpz_swap(num_.back().get_mpz_t(), tnum[0].get_mpz_t());
  }
}

Rational CoefficientTable::entry(long j) const {
  check_index(j);
  return Rational(num_[j], den_);
}

int CoefficientTable::sign(long j) const {
  check_index(j);
  return sgn(num_[j]) >= 0 ? 1 : -1;
}

const mpz_class& CoefficientTable::raw_numerator(long j) const {
  check_index(j);
  return num_[j];
}

bool CoefficientTable::abs_at_most_one(long j) const {
  check_index(j);
  return mpz_cmpabs(num_[j].get_mpz_t(), den_.get_mpz_t()) <= 0;
}

BigReal CoefficientTable::entry_real(long j, long precision_bits) const {
  check_index(j);
  const long wp = precision_bits + 32;
  return (BigReal::of(num_[j], wp) / BigReal::of(den_, wp)).round_to(precision_bits);
}

BigReal CoefficientTable::coefficient_c(long j, long precision_bits) const {
  check_index(j);
  const long wp = precision_bits + 32;
  BigReal a = BigReal::of(num_[j], wp) / BigReal::of(den_, wp);
  return (compute_e(wp) * a).round_to(precision_bits);
}

}  // namespace eseries
