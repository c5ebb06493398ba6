#include "dfsum/constant_field.hpp"

#include "dfsum/errors.hpp"

namespace dfsum {

ConstantFieldDescription constant_generators(const std::vector<FieldElement>& lambda, const Options& opts) {
  ExponentLattice lat = exponent_lattice(lambda, opts);
  ConstantFieldDescription out;
  out.exact = lat.exact;
  out.generators = lat.basis.row_list();
  return out;
}

bool is_constant(const RatFunc& f, const std::vector<FieldElement>& lambda) {
  return sigma_apply(f, SigmaSpec(lambda), 1) == f;
}

RatFunc monomial_function(const IntVector& e, const FieldElement& c) {
  std::vector<long> v;
  for (const auto& x : e) {
    if (!x.fits_slong_p()) throw CapabilityError("exponent too large");
    v.push_back(x.get_si());
  }
  return laurent_monomial(v, c);
}

}  // namespace dfsum
