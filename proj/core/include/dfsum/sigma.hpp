#pragma once

#include <vector>

#include "dfsum/ratfunc.hpp"

namespace dfsum {

// sigma(x_i) = lambda_i * x_i, identity on F.
class SigmaSpec {
 public:
  SigmaSpec() = default;
  explicit SigmaSpec(std::vector<FieldElement> multipliers);

  std::size_t nvars() const noexcept { return lambda_.size(); }
  const std::vector<FieldElement>& multipliers() const noexcept { return lambda_; }
  const FieldElement& operator[](std::size_t i) const { return lambda_.at(i); }

  // sigma^k
  SigmaSpec power(long k) const;
  // the first m multipliers
  SigmaSpec restrict(std::size_t m) const;
  // lambda^e
  FieldElement eigenvalue(const Exponents& e) const;
  FieldElement eigenvalue(const std::vector<long>& e) const;

 private:
  std::vector<FieldElement> lambda_;
};

MultiPoly sigma_apply(const MultiPoly& p, const SigmaSpec& spec, long k = 1);
RatFunc sigma_apply(const RatFunc& f, const SigmaSpec& spec, long k = 1);

// c * sigma(g) - g
RatFunc delta(const RatFunc& g, const FieldElement& c, const SigmaSpec& spec);

}  // namespace dfsum
