#include <doctest.h>

#include <json.hpp>

#include "commands.hpp"
#include "lahbell/errors.hpp"

using namespace lahbell;
using namespace lahbell::cli;
using nlohmann::json;

namespace {

void check_round_trip(const std::string& out) {
  CHECK(json::parse(out).dump(2) + "\n" == out);
}

}  // namespace

TEST_CASE("table") {
  CHECK(cmd_table("lah", 3, Format::text).out == "1\n0 1\n0 2 1\n0 6 6 1\n");
  CHECK(cmd_table("s1", 2, Format::csv).out == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,-1\n2,2,1\n");
  const auto j = json::parse(cmd_table("s2", 3, Format::json).out);
  CHECK(j["rows"][3] == json::array({"0", "1", "3", "1"}));
  CHECK_THROWS_AS(cmd_table("s3", 3, Format::text), UnknownNameError);
}

TEST_CASE("seq") {
  CHECK(cmd_seq("lah_bell", 8, Format::text).out == "1,1,3,13,73,501,4051,37633,394353\n");
  CHECK(cmd_seq("bell", 2, Format::csv).out == "n,value\n0,1\n1,1\n2,2\n");
  const auto j = json::parse(cmd_seq("lah_bell", 30, Format::json).out);
  CHECK(j["values"][30].is_string());
  CHECK_THROWS_AS(cmd_seq("fib", 3, Format::text), UnknownNameError);
}

TEST_CASE("poly") {
  CHECK(cmd_poly("lah_bell", 2, Format::text).out == "x^2 + 2*x\n");
  CHECK(cmd_poly("laguerre", 1, Format::text, BigRational(1, 2)).out == "-x + 3/2\n");
  CHECK(json::parse(cmd_poly("laguerre", 1, Format::json).out)["alpha"] == "alpha");
  CHECK_THROWS_AS(cmd_poly("lah_bell", 2, Format::csv), PreconditionError);
  CHECK_THROWS_AS(cmd_poly("nope", 2, Format::text), UnknownNameError);
}

TEST_CASE("gf") {
  CHECK(cmd_gf("lah_bell", 4, {}, Format::text).out == "1\n1\n3\n13\n73\n");
  CHECK(cmd_gf("bell", 2, {}, Format::csv).out == "n,egf_coefficient\n0,1\n1,1\n2,2\n");
  const auto j = json::parse(cmd_gf("lah_bell_poly", 2, GfParams{BigRational(2), {}, {}, {}}, Format::json).out);
  CHECK(j["params"]["x"] == "2");
  CHECK(j["egf_coefficients"] == json::array({"1", "2", "8"}));
}

TEST_CASE("verify") {
  const auto ok = cmd_verify({"thm2", "eq3"}, 6u, false, Format::text);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("2/2 identities passed") != std::string::npos);
  const auto j = json::parse(cmd_verify({}, 5u, false, Format::json).out);
  REQUIRE(j.is_array());
  for (const auto& r : j) {
    CHECK(r["status"] == "pass");
    CHECK_FALSE(r.contains("counterexample"));
    CHECK(r["range"].get<std::string>().find("..") != std::string::npos);
  }
  CHECK_THROWS_AS(cmd_verify({"all"}, 5u, false, Format::csv), PreconditionError);
  CHECK_THROWS_AS(cmd_verify({"nope"}, 5u, false, Format::text), UnknownNameError);
}

TEST_CASE("dobinski") {
  const auto r = cmd_dobinski("lah_bell", 3, BigRational(1, 2), parse_rational("1e-20"), Format::text);
  CHECK(r.out.find("value: 4.625000000000000000000\n") == 0);
  CHECK(r.out.find("error_bound: 3.40e-22\n") != std::string::npos);
  const auto j = json::parse(cmd_dobinski("bell", 2, BigRational(1), BigRational(1, 1000), Format::json).out);
  CHECK(j["x"] == "1");
  CHECK_THROWS_AS(cmd_dobinski("nope", 2, BigRational(1), BigRational(1, 10), Format::text), UnknownNameError);
  CHECK_THROWS_AS(cmd_dobinski("bell", 2, BigRational(1), BigRational(1, 10), Format::csv), PreconditionError);
}

TEST_CASE("partitions") {
  const auto j = json::parse(cmd_partitions(3).out);
  CHECK(j["count"] == 13);
  CHECK(j["partitions"].size() == 13);
  CHECK_THROWS_AS(cmd_partitions(6), PreconditionError);
}

TEST_CASE("property: json output re-serializes byte-identically") {
  check_round_trip(cmd_table("lah", 6, Format::json).out);
  check_round_trip(cmd_seq("bell", 20, Format::json).out);
  check_round_trip(cmd_poly("bivariate_lah_bell", 4, Format::json).out);
  check_round_trip(cmd_gf("degenerate_lah_bell", 5, {}, Format::json).out);
  check_round_trip(cmd_verify({"all"}, 4u, true, Format::json).out);
  check_round_trip(cmd_dobinski("lah_bell", 5, BigRational(3), BigRational(1, 100000), Format::json).out);
  check_round_trip(cmd_partitions(2).out);
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), UnknownNameError);
}
