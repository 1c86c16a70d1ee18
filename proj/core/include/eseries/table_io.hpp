#pragma once

#include <iosfwd>

#include "eseries/coefficients.hpp"

namespace eseries {

// CSV rows `j,numerator,denominator,decimal` for j = 0..j_max: the exact
// canonical parts of a_j and c_j = e*a_j in scientific notation with the
// digit count implied by precision_bits.
void write_table_csv(std::ostream& out, const CoefficientTable& table, long j_max,
                     long precision_bits);

// JSON array [{"j": 0, "num": "1", "den": "1"}, ...]. The integers are
// decimal strings because they outgrow every fixed-width type.
void write_table_json(std::ostream& out, const CoefficientTable& table, long j_max);

}  // namespace eseries
