#include "eseries/partitions.hpp"

#include <utility>

#include "eseries/errors.hpp"

namespace eseries {

bool PartitionVector::is_valid() const {
  if (weight < 0 || static_cast<long>(multiplicities.size()) != weight) return false;
  long sum = 0;
  for (long l = 1; l <= weight; ++l) {
    const long k = multiplicities[static_cast<size_t>(l - 1)];
    if (k < 0) return false;
    sum += l * k;
    if (sum > weight) return false;
  }
  return sum == weight;
}

namespace {

// Descends over part sizes l = j, j-1, ..., 1, choosing the multiplicity
// k_l at each level. `remaining` is the weight still to be distributed
// among parts of size <= l.
void descend(long l, long remaining, PartitionVector& pv,
             const std::function<void(const PartitionVector&)>& visit) {
  if (l == 0) {
    if (remaining == 0) visit(pv);
    return;
  }
  if (l == 1) {
    // Parts of size 1 absorb whatever weight is left; k_1 is forced.
    pv.multiplicities[0] = remaining;
    visit(pv);
    pv.multiplicities[0] = 0;
    return;
  }
  for (long k = 0; k * l <= remaining; ++k) {
    pv.multiplicities[static_cast<size_t>(l - 1)] = k;
    descend(l - 1, remaining - k * l, pv, visit);
  }
  pv.multiplicities[static_cast<size_t>(l - 1)] = 0;
}

}  // namespace

void enumerate_partitions(long j, const std::function<void(const PartitionVector&)>& visit) {
  if (j < 0) throw DomainError("enumerate_partitions: j must be >= 0");
  PartitionVector pv;
  pv.weight = j;
  pv.multiplicities.assign(static_cast<size_t>(j), 0);
  descend(j, j, pv, visit);
}

std::vector<PartitionVector> list_partitions(long j) {
  std::vector<PartitionVector> out;
  enumerate_partitions(j, [&out](const PartitionVector& pv) { out.push_back(pv); });
  return out;
}

std::vector<mpz_class> partition_counts_up_to(long j_max) {
  if (j_max < 0) throw DomainError("partition_counts_up_to: j_max must be >= 0");
  std::vector<mpz_class> p(static_cast<size_t>(j_max) + 1);
  p[0] = 1;
  for (long n = 1; n <= j_max; ++n) {
    mpz_class acc = 0;
    // Generalized pentagonal numbers g = k(3k -/+ 1)/2 with alternating
    // signs: P(n) = sum_k (-1)^{k+1} [P(n - k(3k-1)/2) + P(n - k(3k+1)/2)].
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const bool plus = (k % 2) == 1;
      if (plus) {
        acc += p[static_cast<size_t>(n - g1)];
      } else {
        acc -= p[static_cast<size_t>(n - g1)];
      }
      const long g2 = k * (3 * k + 1) / 2;
      if (g2 <= n) {
        if (plus) {
          acc += p[static_cast<size_t>(n - g2)];
        } else {
          acc -= p[static_cast<size_t>(n - g2)];
        }
      }
    }
    p[static_cast<size_t>(n)] = std::move(acc);
  }
  return p;
}

mpz_class partition_count(long j) {
  return partition_counts_up_to(j).back();
}

Rational a_via_partitions(long j) {
  if (j < 0) throw DomainError("a_via_partitions: j must be >= 0");
  if (j > kPartitionCostCeiling) {
    throw CostLimitError("a_via_partitions: j exceeds the cost ceiling of " +
                         std::to_string(kPartitionCostCeiling) + " (P(j) grows exponentially)");
  }

  // Memoized factorials up to the largest possible multiplicity (k_1 = j).
  std::vector<mpz_class> fact(static_cast<size_t>(j) + 1);
  fact[0] = 1;
  for (long k = 1; k <= j; ++k) fact[static_cast<size_t>(k)] = fact[static_cast<size_t>(k - 1)] * k;

  mpq_class sum(0);
  enumerate_partitions(j, [&](const PartitionVector& pv) {
    // Term for this vector: 1 / (prod_l (l+1)^{k_l} * k_l!). All terms are
    // positive; the global sign (-1)^j is applied at the end.
    mpz_class den(1);
    for (long l = 1; l <= j; ++l) {
      const long k = pv.multiplicities[static_cast<size_t>(l - 1)];
      if (k == 0) continue;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(l + 1), static_cast<unsigned long>(k));
      den *= pw;
      den *= fact[static_cast<size_t>(k)];
    }
    // gcd(1, den) = 1, so the term is canonical by construction.
    sum += mpq_class(mpz_class(1), den);
  });
  if (j % 2 != 0) sum = -sum;
  return Rational(std::move(sum));
}

BigReal hardy_ramanujan(long j, long precision_bits) {
  if (j < 1) throw DomainError("hardy_ramanujan: j must be >= 1");
  const long wp = precision_bits + 32;
  const BigReal pi = BigReal::pi(wp);
  const BigReal arg = pi * sqrt(BigReal::of(2 * j, wp) / 3L);
  const BigReal den = BigReal::of(4 * j, wp) * sqrt(BigReal::of(3L, wp));
  return (exp(arg) / den).round_to(precision_bits);
}

}  // namespace eseries
