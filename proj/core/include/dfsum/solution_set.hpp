#pragma once

#include <optional>
#include <variant>

#include "dfsum/constant_field.hpp"
#include "dfsum/summability.hpp"

namespace dfsum {

// A nonzero g with c sigma(g) = g, necessarily a Laurent monomial.
struct HomogeneousSolution {
  std::optional<RatFunc> generator;
  std::optional<IntVector> exponents;
  bool exact = true;  // false: absence may be an artifact of a bounded search
};
HomogeneousSolution homogeneous_solution(const FieldElement& c, const std::vector<FieldElement>& lambda,
                                         const Options& opts = {});

// { F * homogeneous + particular : F constant }, or just { particular }.
struct SolutionSet {
  RatFunc particular;
  std::optional<RatFunc> homogeneous;
  ConstantFieldDescription constants;
  bool unique() const { return !homogeneous.has_value(); }
};
using SolveAllResult = std::variant<SolutionSet, NotSummable, Unknown>;

SolveAllResult solve_all(const RatFunc& f, const FieldElement& c, const SigmaSpec& spec, const Options& opts = {});

// F * homogeneous + particular; F must be a constant of sigma
RatFunc sample_member(const SolutionSet& s, const RatFunc& F);

}  // namespace dfsum
