#include "eseries/table_io.hpp"

#include <ostream>

#include "vendor/json.hpp"

#include "eseries/errors.hpp"
#include "eseries/series.hpp"

namespace eseries {

namespace {

void check_export_range(const CoefficientTable& table, long j_max) {
  if (j_max < 0) throw DomainError("table export: j_max must be >= 0");
  if (j_max > table.max_index()) {
    throw TableRangeError("table export: table extends only to " +
                          std::to_string(table.max_index()));
  }
}

}  // namespace

void write_table_csv(std::ostream& out, const CoefficientTable& table, long j_max,
                     long precision_bits) {
  check_export_range(table, j_max);
  const long wp = precision_bits + 32;
  const BigReal e_w = compute_e(wp);
  const long digits = decimal_digits_for_bits(precision_bits);

  out << "j,numerator,denominator,decimal\n";
  for (long j = 0; j <= j_max; ++j) {
    const Rational a = table.entry(j);
    const BigReal c = (e_w * table.entry_real(j, wp)).round_to(precision_bits);
    out << j << ',' << a.num().get_str() << ',' << a.den().get_str() << ','
        << c.str_sci(digits) << '\n';
  }
}

void write_table_json(std::ostream& out, const CoefficientTable& table, long j_max) {
  check_export_range(table, j_max);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long j = 0; j <= j_max; ++j) {
    const Rational a = table.entry(j);
    rows.push_back({{"j", j}, {"num", a.num().get_str()}, {"den", a.den().get_str()}});
  }
  out << rows.dump(2) << '\n';
}

}  // namespace eseries
