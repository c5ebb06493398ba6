#include "doctest.h"
#include "dfsum/spread.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dfsum;

namespace {

MultiPoly x(std::size_t i, std::size_t n = 3) { return MultiPoly::variable(n, i); }
MultiPoly k(long v, std::size_t n = 3) { return MultiPoly(n, FieldElement(v)); }
const SigmaSpec worked_spec({FieldElement(-1), FieldElement(1, 2), FieldElement(-4)});

IntVector iv(std::initializer_list<long> v) {
  IntVector r;
  for (long a : v) r.emplace_back(a);
  return r;
}

bool matches_brute(const SpreadResult& r, const std::vector<long>& brute, long range) {
  for (long kk = -range; kk <= range; ++kk) {
    bool in = std::find(brute.begin(), brute.end(), kk) != brute.end();
    if (r.set.contains(kk) != in) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("two-term spreads from the worked example") {
  MultiPoly p1 = x(1) * x(1) * x(2) + k(1), q1 = x(1) * x(1) * x(2) - k(1);
  TwoTermSpread a = spread_two_term(p1, q1, worked_spec);
  CHECK(a.result.set == Progression::arith(1, 2));
  CHECK(a.matrix == (IntMatrix{{0, -1, 0}, {2, -2, -4}, {1, -1, -2}}));
  REQUIRE(a.solutions.particular);
  CHECK(power_product(worked_spec.multipliers(), a.rhs) == FieldElement(-1));
  // same solution set as the system with the original right-hand side, projected to k
  CHECK((*a.solutions.particular)[0] % 2 == 1);
  REQUIRE(a.solutions.kernel_basis.size() == 1);
  CHECK(a.solutions.kernel_basis[0] == iv({2, 0, 1}));

  MultiPoly p2 = x(1) * x(1) * x(2) + x(1) * x(2), q2 = x(1) * x(1) * x(2) + k(8) * x(1) * x(2);
  TwoTermSpread b = spread_two_term(p2, q2, worked_spec);
  CHECK(b.result.set == Progression::single(3));
  REQUIRE(b.solutions.particular);
  CHECK((*b.solutions.particular)[0] == 3);
  CHECK(b.solutions.kernel_basis.empty());

  CHECK(spread_pair_singleterm(x(0), x(0), worked_spec).set == Progression::all());
}

TEST_CASE("spread examples") {
  SpreadResult a = spread(x(0) + x(2), x(0) * FieldElement(1, 4) + x(2), worked_spec);
  CHECK(a.set == Progression::single(1));
  REQUIRE(a.witness_unit);
  CHECK(*a.witness_unit == FieldElement(-4));

  CHECK(spread(x(0) + x(2), k(2) * x(1) * x(2) - k(1), worked_spec).set.is_empty());

  MultiPoly p = k(2) * x(1) * x(1) * x(2) - k(1);
  CHECK(spread(p, p, worked_spec).set == Progression::arith(0, 2));
  CHECK(sigma_apply(p, worked_spec) == -k(2) * x(1) * x(1) * x(2) - k(1));
  // with a1 in place of a2 the monomial has eigenvalue -4 and the orbit is free
  MultiPoly p1 = k(2) * x(0) * x(0) * x(2) - k(1);
  CHECK(spread(p1, p1, worked_spec).set == Progression::single(0));
  CHECK(testing::brute_spread(p1, p1, worked_spec, 20) == std::vector<long>{0});

  MultiPoly e = x(1) * x(1) * x(2) + x(1) * x(2) + k(1);
  MultiPoly f = x(1) * x(1) * x(2) + k(8) * x(1) * x(2) - k(1);
  SpreadResult r = spread(e, f, worked_spec);
  CHECK(r.set == Progression::single(3));
  CHECK(r.complete);
  REQUIRE(r.witness_unit);
  CHECK(sigma_apply(e, worked_spec, 3) == f * *r.witness_unit);
}

TEST_CASE("orbit unit examples") {
  MultiPoly p = k(2) * x(1) * x(1) * x(2) - k(1);
  CHECK(orbit_unit(p, 2, worked_spec) == FieldElement(1));
  CHECK(orbit_unit(p, 0, worked_spec) == FieldElement(1));
  CHECK_THROWS_AS(orbit_unit(p, 1, worked_spec), DomainError);
  // sigma(p1) = -q1 for the first subproblem of the worked example
  MultiPoly p1 = x(1) * x(1) * x(2) + k(1), q1 = x(1) * x(1) * x(2) - k(1);
  CHECK(*spread(p1, q1, worked_spec).witness_unit == FieldElement(-1));
  CHECK(orbit_unit(p1, 2, worked_spec) == FieldElement(1));
  CHECK(orbit_unit(sigma_apply(p, worked_spec, 3) * FieldElement(5), 4, worked_spec) == FieldElement(1));
}

TEST_CASE("spread laws on random shifted pairs") {
  testing::Gen gen(61);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = gen.integer(1, 3);
    std::vector<FieldElement> lam;
    for (std::size_t i = 0; i < n; ++i) lam.push_back(gen.coin() ? gen.multiplier() : FieldElement(gen.coin() ? -1 : 1));
    SigmaSpec spec(lam);
    MultiPoly p = gen.poly(n, 3, 4);
    if (p.is_zero()) continue;
    long shift = gen.integer(-6, 6);
    MultiPoly q = sigma_apply(p, spec, shift) * gen.nonzero(5, 5);
    SpreadResult self = spread(p, p, spec);
    SpreadResult pq = spread(p, q, spec);
    CHECK(self.set.contains(0));
    CHECK(self.set.offset() == 0);
    CHECK(pq.set.contains(shift));
    // coset law
    CHECK(pq.set.modulus() == self.set.modulus());
    auto brute = testing::brute_spread(p, q, spec, 20);
    CHECK(matches_brute(pq, brute, 20));
    if (pq.witness_unit) CHECK(sigma_apply(p, spec, pq.set.offset().get_si()) == q * *pq.witness_unit);
  }
}

TEST_CASE("unrelated pairs agree with a brute scan") {
  testing::Gen gen(62);
  for (int t = 0; t < 60; ++t) {
    SigmaSpec spec({FieldElement(-1), FieldElement(1, 2), FieldElement(-4)});
    MultiPoly p = gen.poly(3, 3, 3), q = gen.poly(3, 3, 3);
    if (p.is_zero() || q.is_zero()) continue;
    // share the support so the scan is not trivially empty
    MultiPoly q2(3);
    for (const auto& [e, c] : p.terms()) q2.add_term(e, c * FieldElement(gen.coin() ? -1 : 1) * FieldElement(2).pow(gen.integer(-2, 2)));
    CHECK(matches_brute(spread(p, q2, spec), testing::brute_spread(p, q2, spec, 20), 20));
    CHECK(matches_brute(spread(p, q, spec), testing::brute_spread(p, q, spec, 20), 20));
  }
}

TEST_CASE("periodic representative is shift invariant") {
  MultiPoly p = k(2) * x(1) * x(1) * x(2) + x(0) * x(0) - k(1);
  SpreadResult self = spread(p, p, worked_spec);
  REQUIRE(self.set.modulus() > 0);
  long period = self.set.modulus().get_si();
  Representative r0 = periodic_representative(p, period, worked_spec);
  for (long s = 1; s < period + 2; ++s)
    CHECK(periodic_representative(sigma_apply(p, worked_spec, s), period, worked_spec).poly == r0.poly);
}
