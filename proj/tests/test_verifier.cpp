#include <doctest.h>

#include <set>

#include "detloci/verifier.hpp"

using namespace detloci;

namespace {

DegreeData make(int t, int c, int r, int n, std::vector<int> a, std::vector<int> b = {})
{
  DegreeData d;
  d.t = t;
  d.c = c;
  d.r = r;
  d.n = n;
  d.a = std::move(a);
  d.b = b.empty() ? std::vector<int>(t, 0) : std::move(b);
  return d;
}

MatrixSpec spec(MatrixSpec::Kind k, std::uint64_t seed = 1)
{
  MatrixSpec s;
  s.kind = k;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("identity records")
{
  IdentityRecord h = IdentityRecord::compare("x = y", 5, 5, {{"x", 5}});
  CHECK(h.status == IdentityStatus::holds);
  IdentityRecord f = IdentityRecord::compare("x = y", 7, 5, {});
  CHECK(f.status == IdentityStatus::fails);
  CHECK(f.delta() == 2);
  IdentityRecord s = IdentityRecord::skip("x = y", "no data");
  CHECK(s.status == IdentityStatus::skipped);
  CHECK(to_json(s)["reason"] == "no data");
  CHECK(to_json(f)["delta"] == 2);
  CHECK(to_string(IdentityStatus::fails) == "fails");
}

TEST_CASE("generic 3x3 linear matrix in P^8")
{
  CaseReport r = run_case(make(3, 1, 2, 8, {1, 1, 1}), spec(MatrixSpec::Kind::generic));
  CHECK(r.window_value("tangent", 0) == 64);
  CHECK(r.window_value("nB", 0) == 42);
  CHECK(r.window_value("fib1", 0) == 2);
  CHECK(r.window_value("fib2", 0) == 24);
  CHECK(r.window_value("homIB_A", 0) == 48);
  CHECK(r.window_value("tangent", -1) == 9);
  CHECK_FALSE(r.window_value("tangent", 1).has_value());
  CHECK(r.identities.at("thm61cond").status == IdentityStatus::holds);
  CHECK(r.identities.at("thm61cond1").status == IdentityStatus::fails);
  CHECK(r.identities.at("codgen").status == IdentityStatus::holds);
  CHECK(r.identities.at("propo8_recursion").status == IdentityStatus::holds);
  CHECK(r.prediction.status == IdentityStatus::holds);
  CHECK(r.prediction_binding);
  // thm61cond1 fails, so the case verdict is fail.
  CHECK_FALSE(r.pass());
  CHECK(r.verdict() == "fail");
}

TEST_CASE("reports are deterministic and carry the documented fields")
{
  DegreeData d = make(3, 1, 2, 6, {1, 1, 1});
  CaseOptions o;
  o.ext1 = false;
  CaseReport a = run_case(d, spec(MatrixSpec::Kind::random, 3), o);
  CaseReport b = run_case(d, spec(MatrixSpec::Kind::random, 3), o);
  nlohmann::json ja = to_json(a), jb = to_json(b);
  CHECK(ja.dump() == jb.dump());
  for (const char* key : {"inputs", "predicates", "predicted", "invariants", "window", "windows", "computed",
                          "identities", "prediction", "notes", "verdict"})
    CHECK(ja.contains(key));
  for (const char* key : {"thm61cond", "thm61cond1", "propo8_recursion", "codgen", "exgenassump", "a3r",
                          "ext1_cross_check"})
    CHECK(ja["identities"].contains(key));
  CHECK(ja["inputs"]["seed"] == 3);
  CaseReport c = run_case(d, spec(MatrixSpec::Kind::random, 4), o);
  CHECK(to_json(c)["inputs"]["matrix"] != ja["inputs"]["matrix"]);
  CHECK_FALSE(render_table(a).empty());
}

TEST_CASE("skipped identities name the reason")
{
  CaseOptions o;
  o.flag_quantities = false;
  o.ext1 = false;
  CaseReport r = run_case(make(3, 1, 2, 8, {1, 1, 1}), spec(MatrixSpec::Kind::generic), o);
  CHECK(r.identities.at("thm61cond").status == IdentityStatus::skipped);
  CHECK_FALSE(r.identities.at("thm61cond").reason.empty());
  CHECK(r.windows.empty());
  CHECK(r.pass());
}

TEST_CASE("invalid input is rejected before any computation")
{
  CHECK_THROWS(run_case(make(3, 1, 2, 8, {2, 1, 1}), spec(MatrixSpec::Kind::generic)));
  CaseOptions o;
  o.window_lo = 1;
  o.window_hi = 0;
  CHECK_THROWS(run_case(make(3, 1, 2, 8, {1, 1, 1}), spec(MatrixSpec::Kind::generic), o));
}

TEST_CASE("catalog names are unique and lookups list the alternatives")
{
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    CHECK(names.insert(e.name).second);
    CHECK(validation_error(e.data).empty());
  }
  CHECK(names.count("ex1dimW-n15"));
  CHECK(names.count("dimW2-n8"));
  CHECK(names.count("dimW3-n11"));
  CHECK_THROWS_WITH_AS(catalog_entry("nope"), doctest::Contains("ex1dimW-n15"), std::invalid_argument);
}

TEST_CASE("catalog entries reproduce their expected values")
{
  for (const char* name : {"gendet-3x3-n8", "dimW2-n8", "dimW2-n6", "linear-3x3-n6"}) {
    CatalogResult r = verify_entry(catalog_entry(name));
    INFO(name);
    for (const auto& m : r.mismatches) INFO(m);
    CHECK(r.pass());
  }
}

TEST_CASE("parallel catalog runs keep catalog order")
{
  auto serial = verify_catalog("all", std::nullopt, 1);
  auto parallel = verify_catalog("all", std::nullopt, 3);
  REQUIRE(serial.size() == catalog().size());
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(parallel[i].name == catalog()[i].name);
    CHECK(to_json(parallel[i]).dump() == to_json(serial[i]).dump());
  }
}

TEST_CASE("a changed expectation is reported as a mismatch")
{
  CatalogEntry e = catalog_entry("gendet-3x3-n8");
  e.expected_values["lambda_c"] = 65;
  e.expected_identities["thm61cond1"] = IdentityStatus::holds;
  CatalogResult r = verify_entry(e);
  CHECK_FALSE(r.pass());
  CHECK(r.mismatches.size() == 2);
}
