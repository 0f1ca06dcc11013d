#include <doctest.h>

#include "detloci/cli.hpp"

using namespace detloci;

TEST_CASE("a complete case file")
{
  CaseSpec cs = parse_case(R"(
# 3x3 power matrix with a quadric column
name    = quadric column
t = 3
c = 1
r = 2
n = 8
a = 1, 1, 2
b = 0 0 0
matrix  = power
seed    = 9
prime   = 32003
window  = -2..0
checks  = flag, ext1, a3r:2
format  = json
)");
  CHECK(cs.name == "quadric column");
  CHECK(cs.data.a == std::vector<int>{1, 1, 2});
  CHECK(cs.data.b == std::vector<int>{0, 0, 0});
  CHECK(cs.matrix.kind == MatrixSpec::Kind::power);
  CHECK(cs.matrix.seed == 9);
  CHECK(cs.options.prime == 32003);
  CHECK(cs.options.window_lo == -2);
  CHECK(cs.options.window_hi == 0);
  CHECK(cs.window_set);
  CHECK(cs.options.flag_quantities);
  CHECK(cs.options.ext1);
  CHECK(cs.options.a3r_steps == 2);
  CHECK_FALSE(cs.options.kappa);
  CHECK(cs.json);
}

TEST_CASE("defaults and explicit entries")
{
  CaseSpec cs = parse_case("t=2\nc=2\nr=1\nn=3\na=1 1 1\nmatrix=explicit\nentries = x0, x1, x2; x1, x2, x3\n");
  CHECK(cs.data.b == std::vector<int>{0, 0});
  CHECK(cs.matrix.entries == std::vector<std::string>{"x0", "x1", "x2", "x1", "x2", "x3"});
  CHECK(cs.options.prime == 101);
  CHECK_FALSE(cs.window_set);
  CHECK_FALSE(cs.json);
}

TEST_CASE("malformed case files are rejected with the field name")
{
  const std::string base = "t=3\nc=1\nr=2\nn=8\n";
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\ncolour=red\n"), doctest::Contains("unknown key 'colour'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nt=4\n"), doctest::Contains("repeated key 't'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case("t=3\nc=1\nr=2\na=1 1 1\n"), doctest::Contains("n: missing"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=2 1 1\n"), doctest::Contains("a: must be nondecreasing"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 x 1\n"), doctest::Contains("a:"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nprime=100\n"), doctest::Contains("prime"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nwindow=0..-1\n"), doctest::Contains("window"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nchecks=flag,foo\n"), doctest::Contains("foo"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nmatrix=explicit\n"), doctest::Contains("entries"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nentries=x0\n"), doctest::Contains("entries"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\nformat=xml\n"), doctest::Contains("format"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_case(base + "a=1 1 1\njust text\n"), doctest::Contains("line 6"),
                       std::invalid_argument);
}

TEST_CASE("batch files")
{
  auto cases = parse_cases("t=3\nc=1\nr=2\nn=8\na=1 1 1\n---\n\n---\nt=2\nc=2\nr=1\nn=5\na=1 1 1\n");
  REQUIRE(cases.size() == 2);
  CHECK(cases[1].data.t == 2);
  CHECK_THROWS_WITH_AS(parse_cases("t=3\nc=1\nr=2\nn=8\na=1 1 1\n---\nt=2\n"), doctest::Contains("case 2"),
                       std::invalid_argument);
  CHECK_THROWS(parse_cases("# nothing\n"));
}

TEST_CASE("small parsers")
{
  CHECK(parse_window("-3..5") == std::pair<int, int>{-3, 5});
  CHECK_THROWS(parse_window("3-5"));
  CHECK(parse_int_list("1, 2 3", "a") == std::vector<int>{1, 2, 3});
  CHECK(split_entries("x0 , x1^2 ; 0") == std::vector<std::string>{"x0", "x1^2", "0"});
  CHECK_THROWS(split_entries("x0,,x1"));
}

TEST_CASE("invariant report")
{
  CaseSpec cs = parse_case("t=3\nc=1\nr=2\nn=8\na=1 1 1\n");
  nlohmann::json j = invariants_json(cs.data);
  CHECK(j["lambda_c"] == 64);
  CHECK(j["kappa_1"] == 0);
  CHECK(j["kappa_prime"] == 0);
  CHECK(invariants_json(parse_case("t=3\nc=2\nr=2\nn=11\na=1 1 1 1\n").data)["kappa_prime"].is_null());
  for (int c = 1; c <= 6; ++c) {
    std::string a;
    for (int i = 0; i <= c; ++i) a += "1 ";
    CaseSpec p = parse_case("t=2\nr=1\nc=" + std::to_string(c) + "\nn=" + std::to_string(c) + "\na=" + a + "\n");
    CHECK(invariants_json(p.data)["lambda_c"] == c * c + 2 * c - 2);
  }
  std::string text = invariants_text(cs.data);
  CHECK(text.find("lambda_c") != std::string::npos);
  CHECK(text.find("64") != std::string::npos);
  CHECK(text.find("mdr") != std::string::npos);
}

TEST_CASE("prediction rendering")
{
  DimPrediction p = predict_dim(parse_case("t=3\nc=1\nr=2\nn=8\na=1 1 2\n").data);
  nlohmann::json j = prediction_json(p);
  CHECK(j["value"] == 152);
  CHECK(j["status"] == "proven");
  CHECK(j["corrections"]["kappa_1"] == 6);
  CHECK(prediction_text(p).find("152") != std::string::npos);
}
