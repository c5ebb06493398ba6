#include <benchmark/benchmark.h>

#include "dfsum/factorization.hpp"

using namespace dfsum;

namespace {

MultiPoly x(std::size_t i) { return MultiPoly::variable(3, i); }
MultiPoly k(long v) { return MultiPoly(3, FieldElement(v)); }

void BM_FactorUnivariate(benchmark::State& state) {
  // (x^4 - 10x^2 + 1)(x^3 - 2)(x^2 + x + 1)
  QPoly p = QPoly(std::vector<Rational>{1, 0, -10, 0, 1}) * QPoly(std::vector<Rational>{-2, 0, 0, 1}) *
            QPoly(std::vector<Rational>{1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate_rational(p));
}
BENCHMARK(BM_FactorUnivariate);

void BM_FactorTrivariate(benchmark::State& state) {
  MultiPoly p = (x(0) * x(1) + x(2) + k(1)) * (x(1) * x(1) * x(2) + x(0) + k(2)) * (x(2) * x(2) - x(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_wrt_last_var(p, 2));
}
BENCHMARK(BM_FactorTrivariate);

void BM_GcdWithSquare(benchmark::State& state) {
  MultiPoly p = x(0) * x(1) * x(1) * x(2) + x(1) * x(2) * x(2) * FieldElement(3) - k(7);
  MultiPoly q = x(0) * x(0) + x(1) * x(2) * x(2) + k(2);
  MultiPoly f = p * p * q;
  MultiPoly df = f.derivative(2);
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(f, df));
}
BENCHMARK(BM_GcdWithSquare);

}  // namespace
