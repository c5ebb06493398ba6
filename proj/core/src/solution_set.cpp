#include "dfsum/solution_set.hpp"

#include "dfsum/errors.hpp"

namespace dfsum {

HomogeneousSolution homogeneous_solution(const FieldElement& c, const std::vector<FieldElement>& lambda,
                                         const Options& opts) {
  if (c.is_zero()) throw DomainError("c must be nonzero");
  HomogeneousSolution out;
  MultiplicativeDecomposition dec = multiplicative_decompose(c.inverse(), lambda, opts);
  out.exact = dec.exact;
  if (!dec.exponents) return out;
  ExponentLattice lat = exponent_lattice(lambda, opts);
  IntVector e = reduce_modulo(*dec.exponents, lat);
  out.generator = monomial_function(e).with_nvars(lambda.size());
  out.exponents = std::move(e);
  return out;
}

SolveAllResult solve_all(const RatFunc& f, const FieldElement& c, const SigmaSpec& spec, const Options& opts) {
  SummabilityOutcome r = is_summable(f, c, spec, opts);
  if (auto* ns = std::get_if<NotSummable>(&r)) return *ns;
  if (auto* u = std::get_if<Unknown>(&r)) return *u;
  HomogeneousSolution h = homogeneous_solution(c, spec.multipliers(), opts);
  if (!h.generator && !h.exact) return Unknown{"homogeneous solution search was inexact"};
  SolutionSet s;
  s.particular = witness(r);
  s.homogeneous = h.generator;
  s.constants = constant_generators(spec.multipliers(), opts);
  return s;
}

RatFunc sample_member(const SolutionSet& s, const RatFunc& F) {
  if (!s.homogeneous) return s.particular;
  return F * *s.homogeneous + s.particular;
}

}  // namespace dfsum
