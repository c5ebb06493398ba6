#pragma once

#include <optional>

#include "dfsum/exponent_lattice.hpp"
#include "dfsum/integer_lattice.hpp"
#include "dfsum/sigma.hpp"

namespace dfsum {

// Spr(p, q) = { k : sigma^k(p) = u q for some nonzero u in F }.
struct SpreadResult {
  Progression set;
  // u with sigma^k0(p) = u q for the canonical representative k0
  std::optional<FieldElement> witness_unit;
  // false when an inexact exponent lattice was involved
  bool complete = true;
};

// The integer system behind a two-term spread, kept for inspection.
struct TwoTermSpread {
  SpreadResult result;
  IntMatrix matrix;  // columns: m - i, -a_1, ..., -a_r
  IntVector rhs;     // I with lambda^I = p_i / q_i
  AffineLattice solutions;
};

// p, q of the form x^m + c x^i (up to scaling) with the same support.
TwoTermSpread spread_two_term(const MultiPoly& p, const MultiPoly& q, const SigmaSpec& spec, const Options& opts = {});
SpreadResult spread_pair_singleterm(const MultiPoly& p, const MultiPoly& q, const SigmaSpec& spec,
                                    const Options& opts = {});

SpreadResult spread(const MultiPoly& p, const MultiPoly& q, const SigmaSpec& spec, const Options& opts = {});

// u with sigma^k(d) = u d; throws DomainError when k is not in Spr(d, d)
FieldElement orbit_unit(const MultiPoly& d, long k, const SigmaSpec& spec);

// Among the monic sigma^s(d), 0 <= s < period, the one with the
// lexicographically smallest coefficient sequence.
struct Representative {
  MultiPoly poly;
  long shift = 0;
};
Representative periodic_representative(const MultiPoly& d, long period, const SigmaSpec& spec);

}  // namespace dfsum
