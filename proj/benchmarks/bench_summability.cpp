#include <benchmark/benchmark.h>

#include "dfsum/companion.hpp"
#include "dfsum/summability.hpp"

using namespace dfsum;

namespace {

MultiPoly x(std::size_t i, std::size_t n) { return MultiPoly::variable(n, i); }
MultiPoly k(long v, std::size_t n) { return MultiPoly(n, FieldElement(v)); }

void BM_SummableUnivariate(benchmark::State& state) {
  SigmaSpec spec({FieldElement(2)});
  MultiPoly a = x(0, 1);
  RatFunc g0 = RatFunc::normalize(a + k(3, 1), (a * a + k(1, 1)).pow(2)) + RatFunc(a * a * a);
  RatFunc f = delta(g0, FieldElement(1), spec);
  for (auto _ : state) benchmark::DoNotOptimize(is_summable(f, FieldElement(1), spec));
}
BENCHMARK(BM_SummableUnivariate);

void BM_SummableTrivariate(benchmark::State& state) {
  SigmaSpec spec({FieldElement(-1), FieldElement(1, 2), FieldElement(-4)});
  MultiPoly d = x(1, 3) * x(1, 3) * x(2, 3) + x(1, 3) * x(2, 3) + k(1, 3);
  RatFunc g0 = RatFunc::normalize(x(0, 3) + k(1, 3), d) + laurent_monomial({1, 0, -2});
  RatFunc f = delta(g0, FieldElement(3), spec);
  for (auto _ : state) benchmark::DoNotOptimize(is_summable(f, FieldElement(3), spec));
}
BENCHMARK(BM_SummableTrivariate);

void BM_NotSummable(benchmark::State& state) {
  SigmaSpec spec({FieldElement(3), FieldElement(1, 2)});
  MultiPoly d = x(0, 2) * x(1, 2) * x(1, 2) + x(0, 2) + k(1, 2);
  RatFunc f = RatFunc::normalize(x(0, 2), d);
  for (auto _ : state) benchmark::DoNotOptimize(is_summable(f, FieldElement(1), spec));
}
BENCHMARK(BM_NotSummable);

void BM_TribonacciGraded(benchmark::State& state) {
  MatrixSystem trib = MatrixSystem::companion({FieldElement(1), FieldElement(1), FieldElement(1)});
  MultiPoly f = x(0, 3).pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_polynomial_graded(trib, f, FieldElement(1)));
}
BENCHMARK(BM_TribonacciGraded)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
