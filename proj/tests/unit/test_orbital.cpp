#include "doctest.h"
#include "dfsum/orbital.hpp"
#include "dfsum/spread.hpp"
#include "support/generators.hpp"

using namespace dfsum;

namespace {

MultiPoly x(std::size_t i, std::size_t n) { return MultiPoly::variable(n, i); }
MultiPoly k(long v, std::size_t n) { return MultiPoly(n, FieldElement(v)); }

void check_invariants(const OrbitalDecomposition& d) {
  const std::size_t v = d.spec.nvars() - 1;
  for (const auto& c : d.components) {
    CHECK(c.representative.involves(v));
    CHECK(c.representative != MultiPoly::variable(d.spec.nvars(), v));
    for (const auto& [l, a] : c.terms) {
      CHECK_FALSE(a.den().involves(v));
      CHECK(a.num().degree(v) < c.representative.degree(v));
    }
  }
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (std::size_t j = i + 1; j < d.components.size(); ++j)
      if (d.components[i].multiplicity == d.components[j].multiplicity)
        CHECK(spread(d.components[i].representative, d.components[j].representative, d.spec).set.is_empty());
  for (const auto& [i, p] : d.laurent) CHECK_FALSE(p.involves(v));
}

}  // namespace

TEST_CASE("polynomial input is all Laurent") {
  SigmaSpec spec({FieldElement(5)});
  OrbitalDecomposition d = orbital_decompose(RatFunc(x(0, 1)), spec);
  CHECK(d.components.empty());
  REQUIRE(d.laurent.size() == 1);
  CHECK(d.laurent.at(1) == RatFunc(1));
}

TEST_CASE("shifted denominators share one component") {
  SigmaSpec spec({FieldElement(2)});
  MultiPoly a = x(0, 1);
  RatFunc f = RatFunc(a - k(1, 1)).inverse() + RatFunc(k(2, 1) * a - k(1, 1)).inverse();
  OrbitalDecomposition d = orbital_decompose(f, spec);
  check_invariants(d);
  CHECK(d.laurent.empty());
  REQUIRE(d.components.size() == 1);
  const auto& c = d.components[0];
  CHECK(c.representative == a - k(1, 1));
  CHECK(c.multiplicity == 1);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms.at(0) == RatFunc(1));
  // 1/(2a - 1) = 1/sigma(a - 1)
  CHECK(c.terms.at(1) == RatFunc(1));
  CHECK(recompose(d) == f);
}

TEST_CASE("mixed Laurent and orbit parts in three variables") {
  SigmaSpec spec({FieldElement(-1), FieldElement(1, 2), FieldElement(-4)});
  MultiPoly a2 = x(1, 3), a3 = x(2, 3);
  MultiPoly tri = a2 * a2 * a3 + a2 * a3 + k(1, 3);
  RatFunc f = RatFunc::normalize(a3 + k(1, 3), a3 * tri);
  OrbitalDecomposition d = orbital_decompose(f, spec);
  check_invariants(d);
  CHECK(d.laurent.count(-1) == 1);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].representative == tri);
  CHECK(d.components[0].multiplicity == 1);
  CHECK(recompose(d) == f);
}

TEST_CASE("recompose trivial cases") {
  OrbitalDecomposition d;
  d.spec = SigmaSpec({FieldElement(2), FieldElement(3)});
  CHECK(recompose(d).is_zero());
  d.laurent[-1] = RatFunc(3);
  CHECK(recompose(d) == RatFunc::normalize(k(3, 2), x(1, 2)));
}

TEST_CASE("higher multiplicities split by power") {
  SigmaSpec spec({FieldElement(3)});
  MultiPoly a = x(0, 1);
  MultiPoly d1 = a * a + k(2, 1);
  RatFunc f = RatFunc::normalize(a.pow(5) + k(7, 1), d1.pow(2) * sigma_apply(d1, spec, 2) * a * a);
  OrbitalDecomposition d = orbital_decompose(f, spec);
  check_invariants(d);
  CHECK(d.components.size() == 2);
  CHECK(recompose(d) == f);
}

TEST_CASE("round trip on random shifted denominators") {
  testing::Gen gen(71);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = gen.integer(1, 3);
    std::vector<FieldElement> lam;
    for (std::size_t i = 0; i < n; ++i) lam.push_back(gen.multiplier());
    SigmaSpec spec(lam);
    MultiPoly den(n, FieldElement(1));
    int parts = static_cast<int>(gen.integer(1, 2));
    for (int i = 0; i < parts; ++i) {
      MultiPoly d = gen.irreducible(n, n - 1, 2);
      den = den * sigma_apply(d, spec, gen.integer(-2, 2)).pow(static_cast<unsigned>(gen.integer(1, 2)));
      if (gen.coin()) den = den * sigma_apply(d, spec, gen.integer(-2, 2));
    }
    if (gen.coin()) den = den * x(n - 1, n).pow(static_cast<unsigned>(gen.integer(1, 2)));
    RatFunc f = RatFunc::normalize(gen.poly(n, 4, 4), den);
    OrbitalDecomposition d = orbital_decompose(f, spec);
    check_invariants(d);
    CHECK(recompose(d) == f);
  }
}

TEST_CASE("decomposition does not depend on how the orbit is written") {
  testing::Gen gen(72);
  for (int t = 0; t < 15; ++t) {
    SigmaSpec spec({gen.multiplier(), gen.multiplier()});
    MultiPoly d = gen.irreducible(2, 1, 2);
    RatFunc a(gen.poly(2, 1, 2));
    RatFunc f1 = a / RatFunc(d) + RatFunc(1) / RatFunc(sigma_apply(d, spec, 1));
    OrbitalDecomposition d1 = orbital_decompose(f1, spec);
    // the same function after normalization, built from the shifted polynomial times a unit
    RatFunc f2 = a / RatFunc(d * FieldElement(3)) * RatFunc(3) +
                 RatFunc(1) / RatFunc(sigma_apply(d, spec, 1) * FieldElement(-2)) * RatFunc(-2);
    OrbitalDecomposition d2 = orbital_decompose(f2, spec);
    REQUIRE(d1.components.size() == d2.components.size());
    for (std::size_t i = 0; i < d1.components.size(); ++i) {
      CHECK(d1.components[i].representative == d2.components[i].representative);
      CHECK(d1.components[i].terms == d2.components[i].terms);
    }
  }
}
