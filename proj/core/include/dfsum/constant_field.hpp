#pragma once

#include <vector>

#include "dfsum/exponent_lattice.hpp"
#include "dfsum/sigma.hpp"

namespace dfsum {

// Generators x^{a_i} of the constant field, one per lattice basis row.
struct ConstantFieldDescription {
  std::vector<IntVector> generators;
  bool exact = true;
};

ConstantFieldDescription constant_generators(const std::vector<FieldElement>& lambda, const Options& opts = {});

// sigma(f) == f
bool is_constant(const RatFunc& f, const std::vector<FieldElement>& lambda);

// x^e as a rational function (positive part over negative part)
RatFunc monomial_function(const IntVector& e, const FieldElement& c = FieldElement(1));

}  // namespace dfsum
