#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dfsum/upoly.hpp"

namespace dfsum {

// Simple algebraic extension Q(t)/(m(t)).
class NumberFieldCtx {
 public:
  // minpoly coefficients low to high; made monic, checked irreducible
  static std::shared_ptr<const NumberFieldCtx> create(const UPoly<Rational>& minpoly, std::string generator);

  const UPoly<Rational>& minimal_polynomial() const noexcept { return minpoly_; }
  const std::string& generator_name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(minpoly_.degree()); }

  bool same_field(const NumberFieldCtx& o) const { return minpoly_ == o.minpoly_ && name_ == o.name_; }

 private:
  NumberFieldCtx(UPoly<Rational> m, std::string n) : minpoly_(std::move(m)), name_(std::move(n)) {}

  UPoly<Rational> minpoly_;
  std::string name_;
};

using FieldCtxPtr = std::shared_ptr<const NumberFieldCtx>;

// Element of Q or of a simple number field. Elements whose value is rational
// are always stored in the rational form, so equality is structural.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : q_(v) {}  // NOLINT
  FieldElement(const Integer& v) : q_(v) {}  // NOLINT
  FieldElement(const Rational& v) : q_(v) { q_.canonicalize(); }  // NOLINT
  FieldElement(long num, long den);

  // sum coeffs[i] * t^i, reduced modulo the minimal polynomial
  static FieldElement from_polynomial(const FieldCtxPtr& ctx, const UPoly<Rational>& value);
  static FieldElement generator(const FieldCtxPtr& ctx);

  bool is_rational() const noexcept { return !ctx_; }
  bool is_zero() const noexcept { return !ctx_ && sgn(q_) == 0; }
  bool is_one() const noexcept { return !ctx_ && q_ == 1; }
  const Rational& rational() const;
  const FieldCtxPtr& context() const noexcept { return ctx_; }
  // polynomial representative of degree < deg m (constant for rationals)
  UPoly<Rational> as_polynomial() const;

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Total order: rationals by value, then number-field elements by
  // coefficient vector (low to high).
  friend int compare(const FieldElement& a, const FieldElement& b);
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }

 private:
  static FieldCtxPtr common_context(const FieldElement& a, const FieldElement& b);
  void set_polynomial(const FieldCtxPtr& ctx, UPoly<Rational> v);

  Rational q_{0};
  FieldCtxPtr ctx_;
  UPoly<Rational> nf_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

}  // namespace dfsum
