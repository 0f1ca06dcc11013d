#include <doctest.h>

#include "detloci/detschemes.hpp"
#include "detloci/gradedhom.hpp"
#include "oracles.hpp"

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

}  // namespace

TEST_CASE("matrix kinds parse")
{
  CHECK(parse_matrix_kind("generic") == MatrixSpec::Kind::generic);
  CHECK(parse_matrix_kind("random") == MatrixSpec::Kind::random);
  CHECK(parse_matrix_kind("power") == MatrixSpec::Kind::power);
  CHECK(parse_matrix_kind("explicit") == MatrixSpec::Kind::explicit_entries);
  CHECK_THROWS_WITH_AS(parse_matrix_kind("sparse"), doctest::Contains("generic"), std::invalid_argument);
}

TEST_CASE("generic and power matrices place distinct variables")
{
  DegreeData d = make(3, 1, 2, 8, {1, 1, 1});
  HomMatrix g = generic_matrix(d);
  PrimeField F(101);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g.at(i, j) == MultiPoly::variable(9, F, 3 * i + j));
  CHECK_FALSE(g.ring()->is_standard());
  CHECK_THROWS(generic_matrix(make(3, 1, 2, 7, {1, 1, 1})));
  CHECK_THROWS(generic_matrix(make(3, 1, 2, 8, {1, 1, 2})));

  DegreeData q = make(3, 1, 2, 8, {1, 1, 2});
  HomMatrix p = power_matrix(q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(p.at(i, j) == MultiPoly::variable(9, F, 3 * i + j, q.A(j + 1)));
}

TEST_CASE("random matrices are reproducible and homogeneous of the right degree")
{
  DegreeData d = make(3, 1, 2, 6, {1, 1, 2}, {0, 0, 1});
  HomMatrix m1 = random_matrix(d, 5), m2 = random_matrix(d, 5), m3 = random_matrix(d, 6);
  CHECK(m1.to_string() == m2.to_string());
  CHECK(m1.to_string() != m3.to_string());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int deg = d.A(j + 1) - d.B(i + 1);
      CHECK(m1.at(i, j).is_homogeneous());
      if (!m1.at(i, j).is_zero()) CHECK(m1.at(i, j).degree() == deg);
    }
  CHECK(random_matrix(d, 5, 32003).to_string() != m1.to_string());
}

TEST_CASE("explicit entry grammar")
{
  PrimeField F(101);
  MultiPoly f = parse_entry("3*x0*x1^2 + x2^3 + 100*x1^3", 4, F);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 3);
  CHECK(f.size() == 3);
  CHECK(parse_entry("0", 4, F).is_zero());
  CHECK(parse_entry("x0 - x0", 4, F).is_zero());
  CHECK_THROWS(parse_entry("x9", 4, F));
  CHECK_THROWS(parse_entry("x0 +", 4, F));
  CHECK_THROWS(parse_entry("y1", 4, F));

  DegreeData d = make(2, 2, 1, 3, {1, 1, 1});
  HomMatrix h = explicit_matrix(d, {"x0", "x1", "x2", "x1", "x2", "x3"});
  CHECK(h.at(1, 2) == MultiPoly::variable(4, F, 3));
  CHECK_THROWS_WITH_AS(explicit_matrix(d, {"x0", "x1", "x2", "x1", "x2"}), doctest::Contains("tokens"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(explicit_matrix(d, {"x0", "x1", "x2^2", "x1", "x2", "x3"}), doctest::Contains("(1,3)"),
                       std::invalid_argument);
  HomMatrix r = explicit_matrix(make(2, 2, 1, 3, {1, 1, 2}), {"x0", "x1", "rand", "x1", "x2", "rand"});
  CHECK(r.at(0, 2).degree() == 2);
}

TEST_CASE("minors of small matrices")
{
  DegreeData d = make(3, 1, 2, 8, {1, 1, 1});
  MinorsIdeal I = minors(generic_matrix(d), 2);
  CHECK(I.ideal.size() == 9);
  CHECK(I.expected_codim == 4);
  for (const auto& g : I.ideal.gens) CHECK(g.degree() == 2);
  MinorsIdeal M = minors(generic_matrix(d), 3);
  CHECK(M.ideal.size() == 1);
  CHECK(M.ideal.gens[0].size() == 6);
  MinorsIdeal R = restrict_to_columns(I, 2, 2);
  CHECK(R.ideal.size() == 3);
  CHECK_THROWS(minors(generic_matrix(d), 4));
}

TEST_CASE("column deletion flag")
{
  DegreeData d = make(3, 3, 2, 14, {1, 1, 1, 1, 1});
  HomMatrix m = generic_matrix(d);
  Flag f = build_flag(m, 2);
  CHECK(f.first == 0);
  CHECK(f.last() == 3);
  // 2-minors of the first k+2 columns.
  for (int k = 0; k <= 3; ++k) {
    CHECK(f.stage_data(k).cols() == k + 2);
    CHECK(static_cast<long long>(f.stage(k).ideal.size()) == 3 * oracle::binom(k + 2, 2));
  }
  HomMatrix del = delete_last_column(m);
  CHECK(del.cols() == 4);
  CHECK(del.ring() == m.ring());
  CHECK_THROWS(build_flag(m, 3));
  DegreeData u = make(2, 2, 1, 5, {1, 1, 1}, {0, 1});
  CHECK_THROWS_WITH_AS(build_flag(explicit_matrix(u, {"x0", "x1", "x2", "0", "0", "1"}), 1), doctest::Contains("unit"),
                       std::invalid_argument);
}

TEST_CASE("dimension of determinantal schemes")
{
  // Segre P^2 x P^2 has Krull dimension 5.
  MinorsIdeal I = minors(generic_matrix(make(3, 1, 2, 8, {1, 1, 1})), 2);
  DimensionEstimate e = dimension_estimate(I, 0, 8);
  CHECK(e.dimension == 5);
  CHECK(certify_expected_dimension(I, 9, 6));
  // Twisted cubic from the Hankel matrix.
  DegreeData h = make(2, 2, 1, 3, {1, 1, 1});
  MinorsIdeal tc = minors(explicit_matrix(h, {"x0", "x1", "x2", "x1", "x2", "x3"}), 2);
  CHECK(dimension_estimate(tc, 0, 6).dimension == 2);
  CHECK(certify_expected_dimension(tc, 4, 6));
  // Proportional rows: every minor vanishes.
  MinorsIdeal z = minors(explicit_matrix(h, {"x0", "x1", "x2", "x0", "x1", "x2"}), 2);
  CHECK(z.ideal.size() == 0);
  CHECK_FALSE(certify_expected_dimension(z, 4, 6));
  // A matrix whose minors share the factor x0 has a component of too large dimension.
  MinorsIdeal w = minors(explicit_matrix(h, {"x0", "0", "x1", "0", "x0", "x2"}), 2);
  CHECK_FALSE(certify_expected_dimension(w, 4, 8));
}
