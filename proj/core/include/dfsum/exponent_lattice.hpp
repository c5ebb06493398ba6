#pragma once

#include <optional>
#include <vector>

#include "dfsum/field.hpp"
#include "dfsum/integer_lattice.hpp"
#include "dfsum/options.hpp"

namespace dfsum {

// U_lambda = { i in Z^n : lambda^i = 1 }, basis rows in HNF.
struct ExponentLattice {
  IntMatrix basis;
  bool exact = true;

  std::size_t rank() const noexcept { return basis.rows(); }
  bool contains(const IntVector& v) const;
};

ExponentLattice exponent_lattice(const std::vector<FieldElement>& lambda, const Options& opts = {});

struct MultiplicativeDecomposition {
  std::optional<IntVector> exponents;  // lambda^I = beta
  bool exact = true;
};

MultiplicativeDecomposition multiplicative_decompose(const FieldElement& beta, const std::vector<FieldElement>& lambda,
                                                     const Options& opts = {});

// v reduced against the HNF basis (canonical coset representative)
IntVector reduce_modulo(const IntVector& v, const ExponentLattice& lat);

// lambda^e by exact evaluation
FieldElement power_product(const std::vector<FieldElement>& lambda, const IntVector& e);

}  // namespace dfsum
