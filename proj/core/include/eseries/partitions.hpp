#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "eseries/bigreal.hpp"
#include "eseries/rational.hpp"

namespace eseries {

// Multiplicity vector (k_1, ..., k_j) of an integer partition of `weight`:
// k_l parts of size l, with sum l*k_l = weight.
struct PartitionVector {
  std::vector<long> multiplicities;  // index 0 holds k_1
  long weight = 0;

  // Checks sum l*k_l = weight. Every emitted vector satisfies this; the
  // method exists so tests can assert it independently.
  bool is_valid() const;
};

// Largest j accepted by a_via_partitions. P(80) is about 1.5e7 vectors,
// which keeps a full oracle run in the minutes range; beyond that the
// exponential growth makes brute force pointless.
inline constexpr long kPartitionCostCeiling = 80;

// Visits every multiplicity vector with sum l*k_l = j exactly once, in a
// deterministic order: recursive descent over part sizes l = j down to 1,
// trying k_l = 0, 1, ... at each level. For j = 0 a single empty vector is
// emitted. The visited reference is only valid during the call.
void enumerate_partitions(long j, const std::function<void(const PartitionVector&)>& visit);

// Convenience wrapper collecting the enumeration into a vector.
std::vector<PartitionVector> list_partitions(long j);

// Number of partitions P(j), exact, via the Euler pentagonal-number
// recurrence. partition_counts_up_to returns P(0..j_max) in one sweep.
std::vector<mpz_class> partition_counts_up_to(long j_max);
mpz_class partition_count(long j);

// Brute-force a_j = (-1)^j * sum over partitions of prod_l (1/(l+1))^{k_l} / k_l!,
// the independent oracle for the recursion table. Throws CostLimitError for
// j above kPartitionCostCeiling.
Rational a_via_partitions(long j);

// Hardy-Ramanujan approximation exp(pi*sqrt(2j/3)) / (4*j*sqrt(3)).
BigReal hardy_ramanujan(long j, long precision_bits = 128);

}  // namespace eseries
