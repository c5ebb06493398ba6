#include <benchmark/benchmark.h>

#include "dfsum/exponent_lattice.hpp"
#include "dfsum/spread.hpp"

using namespace dfsum;

namespace {

const SigmaSpec spec({FieldElement(-1), FieldElement(1, 2), FieldElement(-4)});

MultiPoly x(std::size_t i) { return MultiPoly::variable(3, i); }
MultiPoly k(long v) { return MultiPoly(3, FieldElement(v)); }

void BM_ExponentLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exponent_lattice(spec.multipliers()));
}
BENCHMARK(BM_ExponentLattice);

void BM_SpreadWorkedExample(benchmark::State& state) {
  MultiPoly p = x(1) * x(1) * x(2) + x(1) * x(2) + k(1);
  MultiPoly q = x(1) * x(1) * x(2) + k(8) * x(1) * x(2) - k(1);
  for (auto _ : state) benchmark::DoNotOptimize(spread(p, q, spec));
}
BENCHMARK(BM_SpreadWorkedExample);

// dense polynomial with `terms` monomials against a shift of itself
void BM_SpreadShifted(benchmark::State& state) {
  MultiPoly p(3);
  const long terms = state.range(0);
  for (long i = 0; i < terms; ++i) {
    Exponents e{static_cast<std::uint32_t>(i % 3), static_cast<std::uint32_t>((i / 3) % 4), static_cast<std::uint32_t>(i / 12)};
    p.add_term(e, FieldElement(i + 1));
  }
  MultiPoly q = sigma_apply(p, spec, 5) * FieldElement(7);
  for (auto _ : state) benchmark::DoNotOptimize(spread(p, q, spec));
}
BENCHMARK(BM_SpreadShifted)->Arg(4)->Arg(12)->Arg(36);

}  // namespace
