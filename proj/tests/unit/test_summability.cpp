#include "doctest.h"
#include "dfsum/summability.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dfsum;

namespace {

MultiPoly x(std::size_t i, std::size_t n) { return MultiPoly::variable(n, i); }
MultiPoly k(long v, std::size_t n) { return MultiPoly(n, FieldElement(v)); }

}  // namespace

TEST_CASE("shift reduction identities") {
  SigmaSpec spec({FieldElement(2)});
  MultiPoly a = x(0, 1);
  OrbitComponent c;
  c.representative = a - k(1, 1);
  c.terms[0] = RatFunc(1);
  c.terms[1] = RatFunc(FieldElement(1, 2));
  for (FieldElement cc : {FieldElement(1), FieldElement(3), FieldElement(-1, 2)}) {
    ShiftReduction r = shift_reduce(c, cc, spec);
    CHECK(component_value(c, spec) == delta(r.g, cc, spec) + r.remainder / RatFunc(c.representative));
  }
  OrbitComponent only0;
  only0.representative = a - k(1, 1);
  only0.terms[0] = RatFunc(a * FieldElement(0) + k(5, 1));
  ShiftReduction z = shift_reduce(only0, FieldElement(1), spec);
  CHECK(z.g.is_zero());
  CHECK(z.remainder == RatFunc(5));

  OrbitComponent neg;
  neg.representative = a * a + k(3, 1);
  neg.multiplicity = 2;
  neg.terms[-1] = RatFunc(a + k(1, 1));
  neg.terms[2] = RatFunc(a);
  ShiftReduction r = shift_reduce(neg, FieldElement(1), spec);
  CHECK(component_value(neg, spec) == delta(r.g, FieldElement(1), spec) + r.remainder / RatFunc(neg.representative.pow(2)));
}

TEST_CASE("fraction_summable examples") {
  SigmaSpec s2({FieldElement(2)});
  MultiPoly a = x(0, 1);
  SummabilityOutcome r = fraction_summable(RatFunc(1), a - k(1, 1), 1, FieldElement(1), s2);
  CHECK(std::holds_alternative<NotSummable>(r));
  CHECK_FALSE(testing::ansatz_solvable(QPoly::constant(1), QPoly(std::vector<Rational>{-1, 1}), 2, 1, 1, 3));

  SigmaSpec sm({FieldElement(-1)});
  SummabilityOutcome s = fraction_summable(RatFunc(a), a * a - k(2, 1), 1, FieldElement(1), sm);
  REQUIRE(is_summable_outcome(s));
  CHECK(delta(witness(s), FieldElement(1), sm) == RatFunc::normalize(a, a * a - k(2, 1)));
  CHECK(witness(s) == RatFunc::normalize(-a, k(2, 1) * (a * a - k(2, 1))));

  SummabilityOutcome z = fraction_summable(RatFunc(0), a - k(1, 1), 3, FieldElement(1), s2);
  REQUIRE(is_summable_outcome(z));
  CHECK(witness(z).is_zero());

  CHECK_THROWS_AS(fraction_summable(RatFunc(a), a - k(1, 1), 1, FieldElement(1), s2), DomainError);
}

TEST_CASE("laurent_summable examples") {
  SummabilityOutcome a = laurent_summable(RatFunc(1), 0, FieldElement(2), SigmaSpec({FieldElement(3)}));
  REQUIRE(is_summable_outcome(a));
  CHECK(witness(a) == RatFunc(1));
  SummabilityOutcome b = laurent_summable(RatFunc(1), 1, FieldElement(1), SigmaSpec({FieldElement(2)}));
  REQUIRE(is_summable_outcome(b));
  CHECK(witness(b) == RatFunc(x(0, 1)));
  SummabilityOutcome c = laurent_summable(RatFunc(1), 0, FieldElement(1), SigmaSpec({FieldElement(2)}));
  REQUIRE(std::holds_alternative<NotSummable>(c));
  CHECK(std::get<NotSummable>(c).obstruction.kind == Obstruction::Kind::Laurent);
}

TEST_CASE("is_summable examples") {
  SigmaSpec s2({FieldElement(2)});
  SummabilityOutcome z = is_summable(RatFunc(0), FieldElement(1), s2);
  REQUIRE(is_summable_outcome(z));
  CHECK(witness(z).is_zero());
  MultiPoly a = x(0, 1);
  SummabilityOutcome n = is_summable(RatFunc(a - k(1, 1)).inverse(), FieldElement(1), s2);
  REQUIRE(std::holds_alternative<NotSummable>(n));
  CHECK(std::get<NotSummable>(n).obstruction.kind == Obstruction::Kind::Orbit);
  CHECK_FALSE(std::get<NotSummable>(n).obstruction.describe().empty());
}

TEST_CASE("periodic orbit in two variables") {
  // d has period two under sigma
  SigmaSpec spec({FieldElement(-1), FieldElement(1)});
  MultiPoly a1 = x(0, 2), a2 = x(1, 2);
  MultiPoly d = a2 * a2 + a1 + k(1, 2);
  RatFunc g0 = RatFunc::normalize(a2, d);
  RatFunc f = delta(g0, FieldElement(1), spec);
  SummabilityOutcome r = is_summable(f, FieldElement(1), spec);
  REQUIRE(is_summable_outcome(r));
  CHECK(delta(witness(r), FieldElement(1), spec) == f);
}

TEST_CASE("round trip c sigma(g) - g is summable") {
  testing::Gen gen(81);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = gen.integer(1, 3);
    std::vector<FieldElement> lam;
    for (std::size_t i = 0; i < n; ++i) lam.push_back(gen.coin() ? gen.multiplier() : FieldElement(gen.coin() ? -1 : 1));
    SigmaSpec spec(lam);
    FieldElement c = gen.coin() ? FieldElement(1) : gen.nonzero(3, 2);
    RatFunc g0 = testing::random_g0(gen, spec);
    RatFunc f = delta(g0, c, spec);
    SummabilityOutcome r = is_summable(f, c, spec);
    REQUIRE(is_summable_outcome(r));
    CHECK(delta(witness(r), c, spec) == f);
  }
}

TEST_CASE("witnesses are additive up to homogeneous solutions") {
  testing::Gen gen(82);
  for (int t = 0; t < 15; ++t) {
    SigmaSpec spec({gen.multiplier(), gen.multiplier()});
    FieldElement c(1);
    RatFunc f1 = delta(testing::random_g0(gen, spec), c, spec), f2 = delta(testing::random_g0(gen, spec), c, spec);
    auto r1 = is_summable(f1, c, spec), r2 = is_summable(f2, c, spec), r12 = is_summable(f1 + f2, c, spec);
    REQUIRE((is_summable_outcome(r1) && is_summable_outcome(r2) && is_summable_outcome(r12)));
    RatFunc h = witness(r12) - witness(r1) - witness(r2);
    CHECK(delta(h, c, spec).is_zero());
  }
}

TEST_CASE("componentwise decisions match the global one") {
  testing::Gen gen(83);
  for (int t = 0; t < 25; ++t) {
    SigmaSpec spec({gen.multiplier(), gen.multiplier()});
    FieldElement c = gen.coin() ? FieldElement(1) : gen.nonzero(3, 2);
    RatFunc f = delta(testing::random_g0(gen, spec), c, spec);
    if (gen.coin()) f += RatFunc::normalize(gen.poly(2, 1, 2), gen.irreducible(2, 1, 2));
    if (gen.coin()) f += laurent_monomial(gen.exponents(2, -1, 1), gen.nonzero(3, 3));
    OrbitalDecomposition d = orbital_decompose(f, spec);
    bool all = true;
    for (const auto& [i, p] : d.laurent) all = all && is_summable_outcome(laurent_summable(p, i, c, spec));
    for (const auto& comp : d.components) {
      ShiftReduction sr = shift_reduce(comp, c, spec);
      all = all && is_summable_outcome(fraction_summable(sr.remainder, comp.representative, comp.multiplicity, c, spec));
    }
    SummabilityOutcome r = is_summable(f, c, spec);
    CHECK(is_summable_outcome(r) == all);
    if (is_summable_outcome(r)) CHECK(delta(witness(r), c, spec) == f);
  }
}

TEST_CASE("non-summable simple fractions agree with the ansatz") {
  testing::Gen gen(84);
  for (int t = 0; t < 15; ++t) {
    FieldElement lam = gen.multiplier();
    SigmaSpec spec({lam});
    MultiPoly d = gen.irreducible(1, 0, 2);
    MultiPoly a = gen.poly(1, static_cast<unsigned>(d.degree(0)) - 1, 2);
    if (a.is_zero() || a.degree(0) >= d.degree(0)) continue;
    SummabilityOutcome r = is_summable(RatFunc::normalize(a, d), FieldElement(1), spec);
    std::vector<Rational> ac, dc;
    for (unsigned i = 0; i <= a.degree(0); ++i) ac.push_back(a.coefficient({i}).rational());
    for (unsigned i = 0; i <= d.degree(0); ++i) dc.push_back(d.coefficient({i}).rational());
    bool ans = testing::ansatz_solvable(QPoly(ac), QPoly(dc), lam.rational(), 1, 3, 3 * static_cast<int>(d.degree(0)));
    CHECK(is_summable_outcome(r) == ans);
    CHECK_FALSE(ans);
  }
}

TEST_CASE("number field multipliers") {
  auto ctx = NumberFieldCtx::create(QPoly(std::vector<Rational>{-2, 0, 1}), "s");
  FieldElement s = FieldElement::generator(ctx);
  SigmaSpec spec({s});
  MultiPoly a = x(0, 1);
  RatFunc g0 = RatFunc::normalize(k(1, 1), a - k(1, 1)) + RatFunc(a * a);
  RatFunc f = delta(g0, FieldElement(1), spec);
  SummabilityOutcome r = is_summable(f, FieldElement(1), spec);
  REQUIRE(is_summable_outcome(r));
  CHECK(delta(witness(r), FieldElement(1), spec) == f);
  SummabilityOutcome u = is_summable(RatFunc(a - k(1, 1)).inverse(), FieldElement(1), spec);
  CHECK(std::holds_alternative<Unknown>(u));
}
