#include "dfsum/sigma.hpp"

#include "dfsum/errors.hpp"

namespace dfsum {

SigmaSpec::SigmaSpec(std::vector<FieldElement> multipliers) : lambda_(std::move(multipliers)) {
  for (const auto& l : lambda_)
    if (l.is_zero()) throw DomainError("multiplier must be nonzero");
}

SigmaSpec SigmaSpec::power(long k) const {
  std::vector<FieldElement> l;
  l.reserve(lambda_.size());
  for (const auto& x : lambda_) l.push_back(x.pow(k));
  return SigmaSpec(std::move(l));
}

SigmaSpec SigmaSpec::restrict(std::size_t m) const {
  if (m > lambda_.size()) throw DomainError("cannot restrict to more variables");
  return SigmaSpec(std::vector<FieldElement>(lambda_.begin(), lambda_.begin() + static_cast<long>(m)));
}

FieldElement SigmaSpec::eigenvalue(const Exponents& e) const {
  FieldElement r(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (i >= lambda_.size()) throw DomainError("polynomial has more variables than the automorphism");
    r *= lambda_[i].pow(e[i]);
  }
  return r;
}

FieldElement SigmaSpec::eigenvalue(const std::vector<long>& e) const {
  FieldElement r(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (i >= lambda_.size()) throw DomainError("exponent vector longer than the automorphism");
    r *= lambda_[i].pow(e[i]);
  }
  return r;
}

MultiPoly sigma_apply(const MultiPoly& p, const SigmaSpec& spec, long k) {
  if (k == 0) return p;
  SigmaSpec s = k == 1 ? spec : spec.power(k);
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * s.eigenvalue(e));
  return r;
}

RatFunc sigma_apply(const RatFunc& f, const SigmaSpec& spec, long k) {
  if (k == 0 || f.is_zero()) return f;
  // sigma maps coprime pairs to coprime pairs; only the denominator scale changes
  return RatFunc::from_coprime(sigma_apply(f.num(), spec, k), sigma_apply(f.den(), spec, k));
}

RatFunc delta(const RatFunc& g, const FieldElement& c, const SigmaSpec& spec) {
  return RatFunc(c) * sigma_apply(g, spec, 1) - g;
}

}  // namespace dfsum
