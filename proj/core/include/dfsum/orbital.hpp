#pragma once

#include <map>
#include <vector>

#include "dfsum/options.hpp"
#include "dfsum/sigma.hpp"

namespace dfsum {

// Sum over shifts l of terms[l] / sigma^l(representative)^multiplicity.
// Numerators are polynomials in the last variable whose coefficients are
// rational functions in the others.
struct OrbitComponent {
  MultiPoly representative;
  unsigned multiplicity = 1;
  std::map<long, RatFunc> terms;
  long period = 0;  // k with Spr(d, d) = kZ
};

struct OrbitalDecomposition {
  SigmaSpec spec;
  // coefficient of x_n^i, a rational function in x_1..x_{n-1}
  std::map<long, RatFunc> laurent;
  std::vector<OrbitComponent> components;
  // false when an inexact lattice was used while grouping orbits
  bool complete = true;
};

OrbitalDecomposition orbital_decompose(const RatFunc& f, const SigmaSpec& spec, const Options& opts = {});
RatFunc recompose(const OrbitalDecomposition& d);
RatFunc component_value(const OrbitComponent& c, const SigmaSpec& spec);

// Helpers for polynomials in the last variable over the rational
// functions in the others.
using CoeffPoly = UPoly<RatFunc>;
// f must have a denominator free of x_var; coefficients keep var slots 0..var-1
CoeffPoly split_in(const RatFunc& f, std::size_t var);
RatFunc join_in(const CoeffPoly& p, std::size_t var);

}  // namespace dfsum
