#include "cli.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "vendor/doctest.h"
#include "vendor/json.hpp"

namespace {

int run_cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::vector<const char*> argv{"eseries"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int rc = eseries::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text != nullptr) *out_text = out.str();
  if (err_text != nullptr) *err_text = err.str();
  return rc;
}

long count_lines(const std::string& text) {
  return std::count(text.begin(), text.end(), '\n');
}

}  // namespace

TEST_CASE("coeffs: csv output matches the rendered table byte for byte") {
  std::string out;
  const int rc = run_cli({"coeffs", "--jmax", "2", "--precision-bits", "128"}, &out);
  CHECK(rc == 0);
  CHECK(out ==
        "j,numerator,denominator,decimal\n"
        "0,1,1,2.7182818284590452353602874713526624978e+00\n"
        "1,-1,2,-1.3591409142295226176801437356763312489e+00\n"
        "2,11,24,1.2458791713770623995401317577033036448e+00\n");
}

TEST_CASE("coeffs: json format carries exact fraction strings") {
  std::string out;
  const int rc = run_cli({"--format", "json", "coeffs", "--jmax", "3"}, &out);
  CHECK(rc == 0);
  const auto rows = nlohmann::json::parse(out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 4);
  CHECK(rows[2]["num"] == "11");
  CHECK(rows[3]["num"] == "-7");
  CHECK(rows[3]["den"] == "16");
}

TEST_CASE("coeffs: plain format shows the fractions") {
  std::string out;
  const int rc = run_cli({"--format", "plain", "coeffs", "--jmax", "2"}, &out);
  CHECK(rc == 0);
  CHECK(out.find("11/24") != std::string::npos);
  CHECK(out.find("-1/2") != std::string::npos);
}

TEST_CASE("verify: both constructions agree and the exit code says so") {
  std::string out;
  const int rc = run_cli({"verify", "--jmax", "8"}, &out);
  CHECK(rc == 0);
  CHECK(out.rfind("j,equal\n", 0) == 0);
  CHECK(out.find("\n8,true\n") != std::string::npos);
  CHECK(count_lines(out) == 10);
}

TEST_CASE("asymptotic: residual sweep rows") {
  std::string out;
  const int rc = run_cli({"asymptotic", "--jmin", "2", "--jmax", "5"}, &out);
  CHECK(rc == 0);
  CHECK(out.rfind("j,c_j,leading,eta,scaled\n", 0) == 0);
  CHECK(count_lines(out) == 5);
  CHECK(out.find("\n2,") != std::string::npos);
  CHECK(out.find("\n5,") != std::string::npos);
}

TEST_CASE("quad: fixed node count reports a tiny error against the exact table") {
  std::string out;
  const int rc =
      run_cli({"quad", "--j", "0", "--nodes", "128", "--precision-bits", "256"}, &out);
  CHECK(rc == 0);
  REQUIRE(out.rfind("j,estimate,exact,abs_error,N\n", 0) == 0);
  const auto row = out.substr(out.find('\n') + 1);
  CHECK(row.rfind("0,", 0) == 0);
  CHECK(row.find(",128\n") != std::string::npos);

  // abs_error is the fourth field; the 128-node estimate is good to ~1e-39.
  std::size_t pos = 0;
  for (int commas = 0; commas < 3; ++commas) pos = row.find(',', pos) + 1;
  const double abs_error = std::stod(row.substr(pos, row.find(',', pos) - pos));
  CHECK(abs_error >= 0.0);
  CHECK(abs_error < 1e-30);
}

TEST_CASE("partition: counts with the analytic comparison") {
  std::string out;
  const int rc = run_cli({"partition", "--jmax", "10"}, &out);
  CHECK(rc == 0);
  CHECK(out.rfind("j,P_exact,HR_approx,ratio\n", 0) == 0);
  CHECK(count_lines(out) == 11);
  CHECK(out.find("\n10,42,") != std::string::npos);
}

TEST_CASE("e-digits: self-check passes and names the tail model") {
  std::string out;
  const int rc = run_cli({"e-digits", "--digits", "30", "--check"}, &out);
  CHECK(rc == 0);
  CHECK(out.rfind("value,claimed_digits,tail_bound,tail_model,oracle_digits\n", 0) == 0);
  CHECK(out.find(",validated-empirical,") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  std::string err;
  CHECK(run_cli({}, nullptr, &err) == 2);
  CHECK(run_cli({"coeffs"}, nullptr, &err) == 2);             // missing --jmax
  CHECK(run_cli({"coeffs", "--jmax", "2", "--bogus"}, nullptr, &err) == 2);
  CHECK(run_cli({"nonsense", "--jmax", "2"}, nullptr, &err) == 2);
  CHECK(run_cli({"asymptotic", "--jmin", "1", "--jmax", "5"}, nullptr, &err) == 2);
  CHECK(run_cli({"partition", "--jmax", "0"}, nullptr, &err) == 2);
  CHECK(run_cli({"quad", "--j", "1", "--nodes", "64", "--tol", "1e-10"}, nullptr, &err) == 2);
  CHECK(run_cli({"quad", "--j", "1", "--precision-bits", "128"}, nullptr, &err) == 2);
  CHECK(run_cli({"coeffs", "--jmax", "2", "--precision-bits", "16"}, nullptr, &err) == 2);
}

TEST_CASE("help text lists the subcommands") {
  std::string out;
  const int rc = run_cli({"--help"}, &out);
  CHECK(rc == 0);
  CHECK(out.find("coeffs") != std::string::npos);
  CHECK(out.find("quad") != std::string::npos);
  CHECK(out.find("e-digits") != std::string::npos);
}

TEST_CASE("runs are deterministic") {
  std::string first;
  std::string second;
  CHECK(run_cli({"asymptotic", "--jmin", "2", "--jmax", "20"}, &first) == 0);
  CHECK(run_cli({"asymptotic", "--jmin", "2", "--jmax", "20"}, &second) == 0);
  CHECK(first == second);
  CHECK(!first.empty());
}
