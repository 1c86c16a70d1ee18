#include "eseries/table_io.hpp"

#include <sstream>

#include "eseries/coefficients.hpp"
#include "eseries/errors.hpp"
#include "vendor/doctest.h"
#include "vendor/json.hpp"

using eseries::CoefficientTable;

TEST_CASE("csv export: header, exact fractions, rendered decimals") {
  CoefficientTable t;
  t.extend(2);
  std::ostringstream os;
  write_table_csv(os, t, 2, 128);
  CHECK(os.str() ==
        "j,numerator,denominator,decimal\n"
        "0,1,1,2.7182818284590452353602874713526624978e+00\n"
        "1,-1,2,-1.3591409142295226176801437356763312489e+00\n"
        "2,11,24,1.2458791713770623995401317577033036448e+00\n");
}

TEST_CASE("json export: integers as decimal strings") {
  CoefficientTable t;
  t.extend(4);
  std::ostringstream os;
  write_table_json(os, t, 4);

  const auto rows = nlohmann::json::parse(os.str());
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0]["j"] == 0);
  CHECK(rows[0]["num"] == "1");
  CHECK(rows[0]["den"] == "1");
  CHECK(rows[2]["num"] == "11");
  CHECK(rows[2]["den"] == "24");
  CHECK(rows[4]["num"] == "2447");
  CHECK(rows[4]["den"] == "5760");
  CHECK(rows[3]["num"].is_string());
}

TEST_CASE("export range is validated") {
  CoefficientTable t;
  t.extend(3);
  std::ostringstream os;
  CHECK_THROWS_AS(write_table_csv(os, t, 9, 128), eseries::TableRangeError);
  CHECK_THROWS_AS(write_table_json(os, t, -1), eseries::DomainError);
}

TEST_CASE("exports are deterministic") {
  CoefficientTable t;
  t.extend(6);
  std::ostringstream a, b;
  write_table_csv(a, t, 6, 192);
  write_table_csv(b, t, 6, 192);
  CHECK(a.str() == b.str());
}
