#include "doctest.h"
#include "dfsum/exponent_lattice.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dfsum;

namespace {

std::vector<FieldElement> fe(std::initializer_list<std::pair<long, long>> v) {
  std::vector<FieldElement> r;
  for (auto [a, b] : v) r.emplace_back(a, b);
  return r;
}

IntVector iv(std::initializer_list<long> v) {
  IntVector r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("exponent lattice examples") {
  ExponentLattice l = exponent_lattice(fe({{-1, 1}, {1, 2}, {-4, 1}}));
  CHECK(l.exact);
  CHECK(l.basis == (IntMatrix{{1, 2, 1}, {0, 4, 2}}));
  CHECK(exponent_lattice(fe({{2, 1}})).rank() == 0);
  ExponentLattice l2 = exponent_lattice(fe({{2, 1}, {4, 1}}));
  REQUIRE(l2.rank() == 1);
  CHECK((l2.contains(iv({2, -1})) && l2.contains(iv({-2, 1}))));
  CHECK(hnf(l2.basis) == hnf(IntMatrix{{2, -1}}));
  CHECK_THROWS_AS(exponent_lattice(fe({{0, 1}})), DomainError);
}

TEST_CASE("multiplicative decomposition examples") {
  auto lambda = fe({{-1, 1}, {1, 2}, {-4, 1}});
  auto a = multiplicative_decompose(FieldElement(1, 8), lambda);
  REQUIRE(a.exponents);
  CHECK(power_product(lambda, *a.exponents) == FieldElement(1, 8));
  IntVector diff = *a.exponents;
  IntVector expected = iv({0, -1, -2});
  for (std::size_t i = 0; i < 3; ++i) diff[i] -= expected[i];
  CHECK(exponent_lattice(lambda).contains(diff));

  auto b = multiplicative_decompose(FieldElement(-1), lambda);
  REQUIRE(b.exponents);
  CHECK(power_product(lambda, *b.exponents) == FieldElement(-1));

  CHECK_FALSE(multiplicative_decompose(FieldElement(3), fe({{2, 1}})).exponents);
  for (long i = -20; i <= 20; ++i) CHECK(FieldElement(2).pow(i) != FieldElement(3));
  CHECK_THROWS_AS(multiplicative_decompose(FieldElement(0), lambda), DomainError);
}

TEST_CASE("rational lattices agree with a box search") {
  testing::Gen gen(31);
  const long pool[][2] = {{-1, 1}, {2, 1}, {1, 2}, {-4, 1}, {3, 2}, {9, 4}, {-2, 3}, {6, 1}, {1, 1}, {-1, 8}};
  for (int t = 0; t < 40; ++t) {
    std::size_t n = gen.integer(1, 3);
    std::vector<FieldElement> lambda;
    std::vector<Rational> lq;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = pool[gen.integer(0, 9)];
      lambda.emplace_back(p[0], p[1]);
      lq.push_back(lambda.back().rational());
    }
    ExponentLattice l = exponent_lattice(lambda);
    for (const auto& row : l.basis.row_list()) CHECK(power_product(lambda, row).is_one());
    for (const auto& pt : testing::brute_lattice_points(lq, 5)) CHECK(l.contains(pt));
    // points of the box outside the lattice do not evaluate to 1
    std::vector<long> e(n, -3);
    for (;;) {
      IntVector v;
      for (long x : e) v.emplace_back(x);
      CHECK(l.contains(v) == power_product(lambda, v).is_one());
      std::size_t i = 0;
      while (i < n && e[i] == 3) e[i++] = -3;
      if (i == n) break;
      ++e[i];
    }
  }
}

TEST_CASE("decompositions evaluate exactly and differ by lattice vectors") {
  testing::Gen gen(32);
  for (int t = 0; t < 40; ++t) {
    std::vector<FieldElement> lambda{gen.multiplier(), gen.multiplier()};
    IntVector e{gen.integer(-4, 4), gen.integer(-4, 4)};
    FieldElement beta = power_product(lambda, e);
    auto d = multiplicative_decompose(beta, lambda);
    REQUIRE(d.exponents);
    CHECK(power_product(lambda, *d.exponents) == beta);
    IntVector diff{(*d.exponents)[0] - e[0], (*d.exponents)[1] - e[1]};
    CHECK(exponent_lattice(lambda).contains(diff));
  }
}

TEST_CASE("number field multipliers use the bounded search") {
  auto ctx = NumberFieldCtx::create(QPoly(std::vector<Rational>{1, 0, 1}), "i");
  FieldElement i = FieldElement::generator(ctx);
  ExponentLattice l = exponent_lattice({i, FieldElement(-1)});
  CHECK_FALSE(l.exact);
  CHECK(l.contains(iv({4, 0})));
  CHECK(l.contains(iv({2, -1})));
  CHECK_FALSE(l.contains(iv({1, 0})));
  for (const auto& row : l.basis.row_list()) CHECK(power_product({i, FieldElement(-1)}, row).is_one());
  auto d = multiplicative_decompose(-i, {i});
  REQUIRE(d.exponents);
  CHECK(power_product({i}, *d.exponents) == -i);
}
