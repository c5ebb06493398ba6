#include "dfsum/ratfunc.hpp"

#include "dfsum/errors.hpp"

namespace dfsum {

RatFunc::RatFunc(const MultiPoly& p) : num_(p), den_(p.nvars(), FieldElement(1)) {}

void RatFunc::scale_den_monic() {
  const FieldElement& lc = den_.leading_coefficient();
  if (lc.is_one()) return;
  FieldElement inv = lc.inverse();
  num_ *= inv;
  den_ *= inv;
}

RatFunc RatFunc::normalize(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const std::size_t n = std::max(num.nvars(), den.nvars());
  if (num.is_zero()) return RatFunc(MultiPoly(n), MultiPoly(n, FieldElement(1)), Raw{});
  MultiPoly g = poly_gcd(num, den);
  RatFunc r(exact_quotient(num, g).with_nvars(n), exact_quotient(den, g).with_nvars(n), Raw{});
  r.scale_den_monic();
  return r;
}

RatFunc RatFunc::from_coprime(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const std::size_t n = std::max(num.nvars(), den.nvars());
  if (num.is_zero()) return RatFunc(MultiPoly(n), MultiPoly(n, FieldElement(1)), Raw{});
  RatFunc r(num.with_nvars(n), den.with_nvars(n), Raw{});
  r.scale_den_monic();
  return r;
}

FieldElement RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::with_nvars(std::size_t n) const { return RatFunc(num_.with_nvars(n), den_.with_nvars(n), Raw{}); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("division by zero rational function");
  RatFunc r(den_, num_, Raw{});
  r.scale_den_monic();
  return r;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Raw{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o.with_nvars(std::max(nvars(), o.nvars()));
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  MultiPoly g = poly_gcd(den_, o.den_);
  if (g.is_one()) {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Raw{});
    scale_den_monic();
    return *this;
  }
  MultiPoly d1 = exact_quotient(den_, g), d2 = exact_quotient(o.den_, g);
  MultiPoly n = num_ * d2 + o.num_ * d1;
  MultiPoly d = d1 * o.den_;
  if (n.is_zero()) return *this = RatFunc(MultiPoly(d.nvars()), MultiPoly(d.nvars(), FieldElement(1)), Raw{});
  MultiPoly h = poly_gcd(n, g);
  if (!h.is_one()) {
    n = exact_quotient(n, h);
    d = exact_quotient(d, h);
  }
  *this = RatFunc(std::move(n), std::move(d), Raw{});
  scale_den_monic();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    const std::size_t n = std::max(nvars(), o.nvars());
    return *this = RatFunc(MultiPoly(n), MultiPoly(n, FieldElement(1)), Raw{});
  }
  MultiPoly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
  MultiPoly n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  MultiPoly d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  *this = RatFunc(std::move(n), std::move(d), Raw{});
  scale_den_monic();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc laurent_monomial(const std::vector<long>& exponents, const FieldElement& c) {
  Exponents pos(exponents.size(), 0), neg(exponents.size(), 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) pos[i] = static_cast<std::uint32_t>(exponents[i]);
    if (exponents[i] < 0) neg[i] = static_cast<std::uint32_t>(-exponents[i]);
  }
  return RatFunc::normalize(MultiPoly::monomial(pos, c), MultiPoly::monomial(neg, FieldElement(1)));
}

}  // namespace dfsum
