#pragma once

// Dense univariate polynomials over an exact field K.
//
// K must be constructible from `long`, support + - * / and unary minus,
// equality, and a free function `is_zero(const K&)` found by ADL or declared
// before instantiation.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "dfsum/errors.hpp"

namespace dfsum {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

namespace detail {
template <class K>
bool coeff_is_zero(const K& k) {
  return is_zero(k);
}
}  // namespace detail

template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const K& v) { return UPoly(std::vector<K>{v}); }
  static UPoly monomial(const K& v, std::size_t deg) {
    std::vector<K> c(deg + 1, K(0));
    c[deg] = v;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(K(1), 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const K& lc() const { return c_.back(); }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const std::vector<K>& coefficients() const noexcept { return c_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const K& s) {
    for (auto& v : c_) v = v * s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const K& s) { return a *= s; }
  friend UPoly operator*(const K& s, UPoly a) { return a *= s; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& a, const UPoly<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<K>(), a};
  std::vector<K> r = a.coefficients();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), K(0));
  const auto& bc = b.coefficients();
  const K inv = K(1) / b.lc();
  const std::size_t db = bc.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (detail::coeff_is_zero(r[i])) continue;
    K t = r[i] * inv;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * bc[j];
  }
  r.resize(db);
  return {UPoly<K>(std::move(q)), UPoly<K>(std::move(r))};
}

template <class K>
UPoly<K> rem(const UPoly<K>& a, const UPoly<K>& b) {
  return divrem(a, b).second;
}

template <class K>
UPoly<K> monic(const UPoly<K>& a) {
  if (a.is_zero()) return a;
  return a * (K(1) / a.lc());
}

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : monic(r);
  }
  return monic(a);
}

template <class K>
struct Xgcd {
  UPoly<K> g, s, t;  // s*a + t*b = g, g monic
};

template <class K>
Xgcd<K> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(K(1)), s1;
  UPoly<K> t0, t1 = UPoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UPoly<K> s2 = s0 - q * s1;
    UPoly<K> t2 = t0 - q * t1;
    if (!r.is_zero()) {
      const K inv = K(1) / r.lc();
      r = r * inv, s2 = s2 * inv, t2 = t2 * inv;
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class K>
UPoly<K> derivative(const UPoly<K>& a) {
  if (a.degree() <= 0) return UPoly<K>();
  std::vector<K> d(a.coefficients().size() - 1, K(0));
  for (std::size_t i = 1; i < a.coefficients().size(); ++i)
    d[i - 1] = a.coefficients()[i] * K(static_cast<long>(i));
  return UPoly<K>(std::move(d));
}

template <class K>
K evaluate(const UPoly<K>& a, const K& x) {
  K acc(0);
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// a(b(x))
template <class K>
UPoly<K> compose(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> acc;
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * b + UPoly<K>::constant(c[i]);
  return acc;
}

template <class K>
UPoly<K> pow(UPoly<K> base, unsigned e) {
  UPoly<K> acc = UPoly<K>::constant(K(1));
  while (e) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return acc;
}

// Yun's algorithm (characteristic zero). Returns monic squarefree factors
// s_i with multiplicity i such that a = lc(a) * prod s_i^i.
template <class K>
std::vector<std::pair<UPoly<K>, unsigned>> squarefree_decomposition(const UPoly<K>& a) {
  std::vector<std::pair<UPoly<K>, unsigned>> out;
  if (a.degree() <= 0) return out;
  UPoly<K> f = monic(a);
  UPoly<K> df = derivative(f);
  UPoly<K> a0 = gcd(f, df);
  UPoly<K> b = divrem(f, a0).first;
  UPoly<K> c = divrem(df, a0).first;
  UPoly<K> d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UPoly<K> ai = gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = divrem(b, ai).first;
    c = divrem(d, ai).first;
    d = c - derivative(b);
  }
  return out;
}

template <class K>
K resultant(UPoly<K> a, UPoly<K> b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  K res(1);
  while (b.degree() > 0) {
    UPoly<K> r = rem(a, b);
    if (r.is_zero()) return K(0);
    const long da = a.degree(), db = b.degree(), dr = r.degree();
    if ((da & 1) && (db & 1)) res = -res;
    for (long i = 0; i < da - dr; ++i) res = res * b.lc();
    a = std::move(b);
    b = std::move(r);
  }
  for (long i = 0; i < a.degree(); ++i) res = res * b.lc();
  return res;
}

}  // namespace dfsum
