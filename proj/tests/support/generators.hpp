#pragma once

#include <cstdint>
#include <random>

#include "dfsum/factorization.hpp"
#include "dfsum/sigma.hpp"

namespace dfsum::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(long num_bound, long den_bound);
  FieldElement nonzero(long num_bound, long den_bound);
  // multiplier that is not a root of unity
  FieldElement multiplier();

  // up to `terms` random terms of total degree <= max_deg
  MultiPoly poly(std::size_t nvars, unsigned max_deg, std::size_t terms, long coeff_bound = 5);
  // monic irreducible polynomial of positive degree in var, not a monomial
  MultiPoly irreducible(std::size_t nvars, std::size_t var, unsigned max_deg);
  // random vector of exponents in [lo, hi]
  std::vector<long> exponents(std::size_t n, long lo, long hi);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Laurent monomial plus polynomial, sometimes plus a fraction over a power of
// an irreducible in the last variable; total degree at most 4
RatFunc random_g0(Gen& gen, const SigmaSpec& spec);

}  // namespace dfsum::testing
