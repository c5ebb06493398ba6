#pragma once

#include "dfsum/multipoly.hpp"

namespace dfsum {

// num/den with gcd(num, den) = 1 and den monic under grlex.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(0, FieldElement(1)) {}
  RatFunc(long v) : num_(0, FieldElement(v)), den_(0, FieldElement(1)) {}  // NOLINT
  RatFunc(const FieldElement& v) : num_(0, v), den_(0, FieldElement(1)) {}  // NOLINT
  RatFunc(const MultiPoly& p);  // NOLINT

  static RatFunc normalize(const MultiPoly& num, const MultiPoly& den);
  // caller guarantees gcd(num, den) = 1; only rescales den to be monic
  static RatFunc from_coprime(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return std::max(num_.nvars(), den_.nvars()); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool involves(std::size_t var) const { return num_.involves(var) || den_.involves(var); }
  long highest_variable() const { return std::max(num_.highest_variable(), den_.highest_variable()); }
  // value of a constant function
  FieldElement constant_value() const;

  RatFunc with_nvars(std::size_t n) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  struct Raw {};
  RatFunc(MultiPoly n, MultiPoly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  void scale_den_monic();

  MultiPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// c * x^exponents with possibly negative exponents
RatFunc laurent_monomial(const std::vector<long>& exponents, const FieldElement& c = FieldElement(1));

}  // namespace dfsum
