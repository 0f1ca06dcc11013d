#include <doctest.h>

#include <algorithm>
#include <set>

#include "detloci/gfpoly.hpp"
#include "oracles.hpp"

using namespace detloci;

namespace {

std::vector<std::vector<std::uint32_t>> random_rows(std::size_t r, std::size_t c, std::uint64_t seed, std::uint32_t p,
                                                    std::uint32_t zero_bias = 0)
{
  std::vector<std::vector<std::uint32_t>> m(r, std::vector<std::uint32_t>(c));
  std::uint64_t k = 0;
  for (auto& row : m)
    for (auto& x : row) {
      std::uint64_t u = counter_random(seed, 99, k++);
      x = (u >> 32) % (zero_bias + 1) == 0 ? static_cast<std::uint32_t>(u % p) : 0;
    }
  return m;
}

DenseMatrix to_dense(const std::vector<std::vector<std::uint32_t>>& rows)
{
  DenseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<std::uint32_t> apply(const DenseMatrix& m, const std::vector<std::uint32_t>& x, const PrimeField& F)
{
  std::vector<std::uint32_t> y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] = F.add(y[i], F.mul(m.at(i, j), x[j]));
  return y;
}

MultiPoly random_poly(int nvars, int degree, std::uint64_t seed, const PrimeField& F)
{
  return random_homogeneous(degree, nvars - 1, seed, F);
}

}  // namespace

TEST_CASE("prime field arithmetic matches integer arithmetic mod p")
{
  for (std::uint32_t p : {3u, 7u, 101u, 32003u, 65521u}) {
    PrimeField F(p);
    for (std::uint32_t k = 0; k < 200; ++k) {
      std::uint32_t x = static_cast<std::uint32_t>(counter_random(p, 1, k) % p);
      std::uint32_t y = static_cast<std::uint32_t>(counter_random(p, 2, k) % p);
      CHECK(F.add(x, y) == (x + y) % p);
      CHECK(F.sub(x, y) == (x + p - y) % p);
      CHECK(F.mul(x, y) == static_cast<std::uint64_t>(x) * y % p);
      CHECK(F.add(x, F.neg(x)) == 0);
      if (x != 0) CHECK(F.inv(x) == oracle::pow_mod(x, p - 2, p));
    }
    CHECK(F.from_int(-1) == p - 1);
    CHECK(F.to_int(p - 1) == -1);
    if (p > 11) CHECK(F.to_int(F.from_int(-5)) == -5);
  }
}

TEST_CASE("field construction rejects composites and large moduli")
{
  CHECK_THROWS(PrimeField(100));
  CHECK_THROWS(PrimeField(2));
  CHECK_THROWS(PrimeField(65537));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
  int count = 0;
  for (std::uint32_t q = 2; q < 1000; ++q) {
    bool trial = true;
    for (std::uint32_t d = 2; d * d <= q; ++d)
      if (q % d == 0) trial = false;
    CHECK(is_prime(q) == trial);
    count += trial;
  }
  CHECK(count == 168);
}

TEST_CASE("monomial enumeration and ranking")
{
  for (int n = 0; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      auto ms = monomials(n, d);
      CHECK(static_cast<long long>(ms.size()) == oracle::binom(n + d, d));
      std::set<std::vector<int>> seen;
      MonomialIndex idx(n + 1, d + 1);
      CHECK(idx.count(d) == ms.size());
      for (std::size_t i = 0; i < ms.size(); ++i) {
        CHECK(ms[i].degree() == d);
        CHECK(idx.rank(ms[i], d) == i);
        seen.insert(std::vector<int>(ms[i].e.begin(), ms[i].e.begin() + n + 1));
        if (i) CHECK(ms[i - 1].grlex_greater(ms[i]));
      }
      CHECK(seen.size() == ms.size());
    }
  CHECK(monomials(2, 2).front() == Monomial::var(0, 2));
}

TEST_CASE("polynomial ring axioms on random forms")
{
  PrimeField F(101);
  for (std::uint64_t s = 0; s < 20; ++s) {
    MultiPoly f = random_poly(4, 2, s, F), g = random_poly(4, 2, s + 100, F), h = random_poly(4, 1, s + 200, F);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    CHECK((f * h).degree() == 3);
    CHECK((f * h).is_homogeneous());
    CHECK(-(-f) == f);
    CHECK(f.scaled(2) == f + f);
  }
}

TEST_CASE("rank agrees with an independent elimination")
{
  for (std::uint32_t p : {101u, 32003u}) {
    PrimeField F(p);
    for (std::uint64_t s = 0; s < 40; ++s) {
      std::size_t r = 1 + s % 9, c = 1 + (s * 7) % 11;
      auto rows = random_rows(r, c, s, p, static_cast<std::uint32_t>(s % 4));
      CHECK(rank(to_dense(rows), F) == oracle::rank_mod_p(rows, p));
    }
  }
}

TEST_CASE("rank-nullity and kernel vectors on random maps")
{
  PrimeField F(101);
  for (std::uint64_t s = 0; s < 60; ++s) {
    std::size_t r = 1 + s % 8, c = 1 + (s * 5) % 12;
    DenseMatrix m = to_dense(random_rows(r, c, s + 1000, 101, static_cast<std::uint32_t>(s % 3)));
    auto ker = kernel_basis(m, F);
    CHECK(rank(m, F) + ker.size() == c);
    for (const auto& v : ker) {
      auto y = apply(m, v, F);
      CHECK(std::all_of(y.begin(), y.end(), [](std::uint32_t x) { return x == 0; }));
    }
    std::vector<std::vector<std::uint32_t>> kr(ker.begin(), ker.end());
    CHECK(oracle::rank_mod_p(kr, 101) == ker.size());
  }
}

TEST_CASE("solve returns a preimage exactly when one exists")
{
  PrimeField F(101);
  for (std::uint64_t s = 0; s < 30; ++s) {
    std::size_t r = 2 + s % 6, c = 1 + s % 4;
    DenseMatrix m = to_dense(random_rows(r, c, s + 2000, 101));
    std::vector<std::uint32_t> x(c);
    for (std::size_t j = 0; j < c; ++j) x[j] = static_cast<std::uint32_t>(counter_random(s, 5, j) % 101);
    auto b = apply(m, x, F);
    auto sol = solve(m, b, F);
    REQUIRE(sol.has_value());
    CHECK(apply(m, *sol, F) == b);
    // Unit targets are solvable exactly when they lie in the column space.
    if (rank(m, F) < r) {
      std::vector<std::vector<std::uint32_t>> aug;
      for (std::size_t i = 0; i < r; ++i) aug.push_back(std::vector<std::uint32_t>(m.row(i), m.row(i) + c));
      for (std::size_t k = 0; k < r; ++k) {
        std::vector<std::uint32_t> e(r, 0);
        e[k] = 1;
        auto a2 = aug;
        for (std::size_t i = 0; i < r; ++i) a2[i].push_back(e[i]);
        bool outside = oracle::rank_mod_p(a2, 101) > oracle::rank_mod_p(aug, 101);
        CHECK(solve(m, e, F).has_value() == !outside);
      }
    }
  }
}

TEST_CASE("echelon normal forms are canonical modulo the row space")
{
  PrimeField F(101);
  auto rows = random_rows(5, 9, 77, 101);
  Echelon E(9, F);
  for (const auto& r : rows) E.insert(r);
  CHECK(E.rank() == oracle::rank_mod_p(rows, 101));
  auto v = random_rows(1, 9, 78, 101)[0];
  auto w = v;
  for (std::size_t j = 0; j < 9; ++j) w[j] = F.add(w[j], F.mul(3, F.sub(rows[1][j], rows[4][j])));
  E.reduce(v);
  E.reduce(w);
  CHECK(v == w);
  for (std::size_t col : E.pivots()) CHECK(v[col] == 0);
  CHECK_THROWS(E.insert(std::vector<std::uint32_t>(8, 1)));
  CHECK_FALSE(E.insert(rows[2]));
}

TEST_CASE("multiplication maps have the expected shape and rank")
{
  PrimeField F(101);
  // x0 * (degree-d monomials) is injective.
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) {
      auto g = mul_map(MultiPoly::variable(n + 1, F, 0), d, F);
      CHECK(static_cast<long long>(g.matrix.cols()) == oracle::binom(n + d, d));
      CHECK(static_cast<long long>(g.matrix.rows()) == oracle::binom(n + d + 1, d + 1));
      CHECK(rank(g.matrix, F) == g.matrix.cols());
    }
}

TEST_CASE("splitmix64 matches the reference stream")
{
  // Reference SplitMix64 seeded with 0: first two outputs.
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(0x9E3779B97F4A7C15ULL) == 0x6E789E6AA1B965F4ULL);
  CHECK(counter_random(1, 2, 3) == counter_random(1, 2, 3));
  CHECK(counter_random(1, 2, 3) != counter_random(1, 2, 4));
  PrimeField F(101);
  CHECK(random_homogeneous(3, 4, 9, F) == random_homogeneous(3, 4, 9, F));
  CHECK(random_homogeneous(3, 4, 9, F).is_homogeneous());
  CHECK(random_homogeneous(3, 4, 9, F).degree() == 3);
}
