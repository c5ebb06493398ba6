#include "dfsum/field.hpp"

#include "dfsum/errors.hpp"
#include "dfsum/qfactor.hpp"

namespace dfsum {

FieldCtxPtr NumberFieldCtx::create(const UPoly<Rational>& minpoly, std::string generator) {
  if (minpoly.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
  if (generator.empty()) throw DomainError("generator name must be nonempty");
  UPoly<Rational> m = monic(minpoly);
  if (!is_irreducible_rational(m)) throw DomainError("minimal polynomial is not irreducible over Q");
  return FieldCtxPtr(new NumberFieldCtx(std::move(m), std::move(generator)));
}

FieldElement::FieldElement(long num, long den) : q_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  q_.canonicalize();
}

void FieldElement::set_polynomial(const FieldCtxPtr& ctx, UPoly<Rational> v) {
  if (ctx) v = rem(v, ctx->minimal_polynomial());
  if (!ctx || v.degree() <= 0) {
    q_ = v.is_zero() ? Rational(0) : v.coeff(0);
    ctx_.reset();
    nf_ = UPoly<Rational>();
    return;
  }
  ctx_ = ctx;
  nf_ = std::move(v);
  q_ = 0;
}

FieldElement FieldElement::from_polynomial(const FieldCtxPtr& ctx, const UPoly<Rational>& value) {
  FieldElement r;
  r.set_polynomial(ctx, value);
  return r;
}

FieldElement FieldElement::generator(const FieldCtxPtr& ctx) {
  if (!ctx) throw DomainError("no number field context");
  return from_polynomial(ctx, UPoly<Rational>::x());
}

const Rational& FieldElement::rational() const {
  if (ctx_) throw DomainError("field element is not rational");
  return q_;
}

UPoly<Rational> FieldElement::as_polynomial() const {
  if (ctx_) return nf_;
  return UPoly<Rational>::constant(q_);
}

FieldCtxPtr FieldElement::common_context(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx_) return b.ctx_;
  if (!b.ctx_) return a.ctx_;
  if (a.ctx_ != b.ctx_ && !a.ctx_->same_field(*b.ctx_))
    throw DomainError("field elements belong to different number fields");
  return a.ctx_;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.q_ = -r.q_;
  r.nf_ = -r.nf_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (!ctx_ && !o.ctx_) {
    q_ += o.q_;
    return *this;
  }
  FieldCtxPtr c = common_context(*this, o);
  set_polynomial(c, as_polynomial() + o.as_polynomial());
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (!ctx_ && !o.ctx_) {
    q_ -= o.q_;
    return *this;
  }
  FieldCtxPtr c = common_context(*this, o);
  set_polynomial(c, as_polynomial() - o.as_polynomial());
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (!ctx_ && !o.ctx_) {
    q_ *= o.q_;
    return *this;
  }
  FieldCtxPtr c = common_context(*this, o);
  if (!o.ctx_) {
    set_polynomial(c, nf_ * o.q_);
  } else if (!ctx_) {
    set_polynomial(c, o.nf_ * q_);
  } else {
    set_polynomial(c, nf_ * o.nf_);
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!ctx_) {
    FieldElement r;
    r.q_ = 1 / q_;
    return r;
  }
  auto x = xgcd(nf_, ctx_->minimal_polynomial());
  return from_polynomial(ctx_, x.s);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(long long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  FieldElement acc(1);
  while (k) {
    if (k & 1ULL) acc *= base;
    k >>= 1ULL;
    if (k) base *= base;
  }
  return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx_ || !b.ctx_) return !a.ctx_ && !b.ctx_ && a.q_ == b.q_;
  return a.nf_ == b.nf_ && (a.ctx_ == b.ctx_ || a.ctx_->same_field(*b.ctx_));
}

int compare(const FieldElement& a, const FieldElement& b) {
  if (!a.ctx_ && !b.ctx_) return cmp(a.q_, b.q_) < 0 ? -1 : (cmp(a.q_, b.q_) > 0 ? 1 : 0);
  if (!a.ctx_) return -1;
  if (!b.ctx_) return 1;
  const auto& x = a.nf_.coefficients();
  const auto& y = b.nf_.coefficients();
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational u = i < x.size() ? x[i] : Rational(0);
    Rational v = i < y.size() ? y[i] : Rational(0);
    int c = cmp(u, v);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace dfsum
