#include "dfsum/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "dfsum/errors.hpp"

namespace dfsum {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da > db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

Exponents MultiPoly::padded(const Exponents& e, std::size_t n) {
  Exponents r = e;
  r.resize(n, 0);
  return r;
}

MultiPoly::MultiPoly(std::size_t nvars, const FieldElement& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exponents(nvars, 0), c);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = power;
  return monomial(std::move(e), FieldElement(1));
}

MultiPoly MultiPoly::monomial(Exponents e, const FieldElement& c) {
  MultiPoly p(e.size());
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (auto v : terms_.begin()->first)
    if (v) return false;
  return true;
}

bool MultiPoly::is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }

const Exponents& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const FieldElement& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

FieldElement MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(padded(e, nvars_));
  return it == terms_.end() ? FieldElement(0) : it->second;
}

FieldElement MultiPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = 0;
  for (auto v : terms_.begin()->first) d += v;
  return d;
}

unsigned MultiPoly::degree(std::size_t var) const {
  unsigned d = 0;
  if (var >= nvars_) return 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

unsigned MultiPoly::min_degree(std::size_t var) const {
  if (terms_.empty() || var >= nvars_) return 0;
  unsigned d = ~0U;
  for (const auto& [e, c] : terms_) d = std::min<unsigned>(d, e[var]);
  return d;
}

bool MultiPoly::involves(std::size_t var) const { return degree(var) > 0; }

long MultiPoly::highest_variable() const {
  for (std::size_t v = nvars_; v-- > 0;)
    if (involves(v)) return static_cast<long>(v);
  return -1;
}

std::size_t MultiPoly::support_size() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (involves(v)) ++n;
  return n;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<MultiPoly> out(degree(var) + 1, MultiPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::uint32_t k = var < nvars_ ? e[var] : 0;
    if (var < nvars_) f[var] = 0;
    out[k].terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& cs, std::size_t var, std::size_t nvars) {
  MultiPoly out(nvars);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms_) {
      Exponents f = padded(e, nvars);
      f[var] += static_cast<std::uint32_t>(k);
      out.add_term(f, c);
    }
  }
  return out;
}

MultiPoly MultiPoly::with_nvars(std::size_t n) const {
  if (n == nvars_) return *this;
  if (n < nvars_)
    for (std::size_t v = n; v < nvars_; ++v)
      if (involves(v)) throw DomainError("cannot drop a variable that occurs");
  MultiPoly r(n);
  for (const auto& [e, c] : terms_) r.terms_.emplace(padded(e, n), c);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  if (leading_coefficient().is_one()) return *this;
  return *this * leading_coefficient().inverse();
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(nvars_);
  if (var >= nvars_) return r;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    r.terms_.emplace(std::move(f), c * FieldElement(static_cast<long>(e[var])));
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc(nvars_, FieldElement(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return acc;
}

MultiPoly MultiPoly::shift_exponent(std::size_t var, long delta) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    long v = static_cast<long>(f[var]) + delta;
    if (v < 0) throw DomainError("negative exponent");
    f[var] = static_cast<std::uint32_t>(v);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  if (e.size() > nvars_) *this = with_nvars(e.size());
  Exponents f = e.size() == nvars_ ? e : padded(e, nvars_);
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(std::move(f), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ > nvars_) *this = with_nvars(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ > nvars_) *this = with_nvars(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  MultiPoly r(n);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(n, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
  return compare(a, b) == 0;
}

int compare(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  GrlexGreater gt;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    Exponents ea = MultiPoly::padded(ia->first, n), eb = MultiPoly::padded(ib->first, n);
    if (gt(ea, eb)) return -1;
    if (gt(eb, ea)) return 1;
    int c = compare(ia->second, ib->second);
    if (c) return c;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

namespace {

bool divides_monomial(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > (i < b.size() ? b[i] : 0)) return false;
  return true;
}

bool single_variable(const MultiPoly& p, std::size_t var) {
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (v != var && p.involves(v)) return false;
  return true;
}

UPoly<FieldElement> to_upoly(const MultiPoly& p, std::size_t var) {
  std::vector<FieldElement> c(p.degree(var) + 1, FieldElement(0));
  for (const auto& [e, v] : p.terms()) c[var < e.size() ? e[var] : 0] = v;
  return UPoly<FieldElement>(std::move(c));
}

MultiPoly from_upoly(const UPoly<FieldElement>& u, std::size_t var, std::size_t nvars) {
  MultiPoly r(nvars);
  for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
    Exponents e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(k);
    r.add_term(e, u.coefficients()[k]);
  }
  return r;
}

MultiPoly lc_in(const MultiPoly& p, std::size_t var) {
  const unsigned d = p.degree(var);
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != d) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const unsigned db = b.degree(var);
  const MultiPoly lb = lc_in(b, var);
  while (!a.is_zero() && a.degree(var) >= db) {
    const unsigned da = a.degree(var);
    MultiPoly la = lc_in(a, var);
    a = lb * a - la * b.shift_exponent(var, static_cast<long>(da - db));
  }
  return a;
}

// image of p in F[x_var] after x_i -> point[i] for i != var
UPoly<FieldElement> specialize(const MultiPoly& p, std::size_t var, const std::vector<FieldElement>& point) {
  std::vector<FieldElement> c(p.degree(var) + 1, FieldElement(0));
  for (const auto& [e, v] : p.terms()) {
    FieldElement t = v;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i]) t *= point[i].pow(e[i]);
    c[e[var]] += t;
  }
  return UPoly<FieldElement>(std::move(c));
}

// upper bound on deg_var gcd(a, b) from a specialization that keeps both degrees
std::optional<unsigned> gcd_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const std::size_t n = a.nvars();
  for (long base = 2; base < 40; base += 7) {
    std::vector<FieldElement> point;
    for (std::size_t i = 0; i < n; ++i) point.emplace_back(base + 3 * static_cast<long>(i));
    UPoly<FieldElement> sa = specialize(a, var, point), sb = specialize(b, var, point);
    if (sa.degree() != static_cast<long>(a.degree(var)) || sb.degree() != static_cast<long>(b.degree(var))) continue;
    return static_cast<unsigned>(gcd(sa, sb).degree());
  }
  return std::nullopt;
}

MultiPoly monomial_gcd(const MultiPoly& m, const MultiPoly& q) {
  Exponents e = m.leading_exponent();
  for (const auto& [f, c] : q.terms())
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], i < f.size() ? f[i] : 0U);
  return MultiPoly::monomial(std::move(e), FieldElement(1));
}

// p with x_y -> t
MultiPoly eval_at(const MultiPoly& p, std::size_t y, const FieldElement& t) {
  MultiPoly r(p.nvars());
  std::vector<FieldElement> pw{FieldElement(1)};
  for (const auto& [e, c] : p.terms()) {
    while (pw.size() <= e[y]) pw.push_back(pw.back() * t);
    Exponents f = e;
    f[y] = 0;
    r.add_term(f, c * pw[e[y]]);
  }
  return r;
}

// p as a polynomial in the other variables with coefficients in F[x_y]
std::map<Exponents, UPoly<FieldElement>, GrlexGreater> split_off(const MultiPoly& p, std::size_t y) {
  std::map<Exponents, std::vector<FieldElement>, GrlexGreater> acc;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[y] = 0;
    auto& v = acc[f];
    if (v.size() <= e[y]) v.resize(e[y] + 1, FieldElement(0));
    v[e[y]] += c;
  }
  std::map<Exponents, UPoly<FieldElement>, GrlexGreater> out;
  for (auto& [f, v] : acc) out.emplace(f, UPoly<FieldElement>(std::move(v)));
  return out;
}

UPoly<FieldElement> content_over(const MultiPoly& p, std::size_t y) {
  UPoly<FieldElement> g;
  for (const auto& [f, u] : split_off(p, y)) {
    g = gcd(g, u);
    if (g.degree() == 0) break;
  }
  return g;
}

// Dense evaluation/interpolation in the lowest variable, recursing on the
// images; exact by trial division at the end.
std::optional<MultiPoly> interpolated_gcd(MultiPoly a, MultiPoly b) {
  const std::size_t n = a.nvars();
  std::size_t y = n;
  for (std::size_t v = 0; v < n && y == n; ++v)
    if (a.involves(v) || b.involves(v)) y = v;
  const UPoly<FieldElement> ca = content_over(a, y), cb = content_over(b, y);
  const MultiPoly cg = from_upoly(gcd(ca, cb), y, n);
  a = exact_quotient(a, from_upoly(ca, y, n));
  b = exact_quotient(b, from_upoly(cb, y, n));
  if (a.is_constant() || b.is_constant()) return cg;

  const auto sa = split_off(a, y), sb = split_off(b, y);
  const UPoly<FieldElement>& la = sa.begin()->second;
  const UPoly<FieldElement>& lb = sb.begin()->second;
  const UPoly<FieldElement> gamma = gcd(la, lb);
  const std::size_t bound = std::min(a.degree(y), b.degree(y)) + static_cast<std::size_t>(gamma.degree());
  const GrlexGreater greater;

  std::optional<Exponents> lead;
  MultiPoly h(n);
  UPoly<FieldElement> basis = UPoly<FieldElement>::constant(FieldElement(1));
  std::size_t used = 0;
  for (long t = 1; t < 4 * static_cast<long>(bound) + 64; ++t) {
    const FieldElement T(t);
    if (evaluate(la, T).is_zero() || evaluate(lb, T).is_zero()) continue;
    MultiPoly g = poly_gcd(eval_at(a, y, T), eval_at(b, y, T)).with_nvars(n);
    if (g.is_constant()) return cg;
    const Exponents& e = g.leading_exponent();
    if (lead && greater(e, *lead)) continue;
    if (!lead || greater(*lead, e)) {
      lead = e;
      h = MultiPoly(n);
      basis = UPoly<FieldElement>::constant(FieldElement(1));
      used = 0;
    }
    g *= evaluate(gamma, T) / g.leading_coefficient();
    const MultiPoly corr = g - eval_at(h, y, T);
    if (!corr.is_zero()) h += from_upoly(basis, y, n) * corr * (FieldElement(1) / evaluate(basis, T));
    basis = basis * UPoly<FieldElement>(std::vector<FieldElement>{-T, FieldElement(1)});
    ++used;
    if ((corr.is_zero() && used > 1) || used > bound) {
      MultiPoly hp = exact_quotient(h, from_upoly(content_over(h, y), y, n));
      if (divide_exact(a, hp) && divide_exact(b, hp)) return (cg * hp).monic();
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const std::size_t n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return MultiPoly(n);
  if (b.is_constant()) return a.with_nvars(n) * b.leading_coefficient().inverse();
  for (std::size_t v = 0; v < n; ++v)
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  MultiPoly r = a.with_nvars(n);
  MultiPoly bb = b.with_nvars(n);
  MultiPoly q(n);
  const Exponents& lb = bb.leading_exponent();
  const FieldElement ilc = bb.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponent();
    if (!divides_monomial(lb, lr)) return std::nullopt;
    Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = lr[i] - lb[i];
    MultiPoly t = MultiPoly::monomial(std::move(e), r.leading_coefficient() * ilc);
    q += t;
    r -= t * bb;
  }
  return q;
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw DomainError("polynomial division is not exact");
  return *q;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.nvars());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly poly_gcd(const MultiPoly& p0, const MultiPoly& q0) {
  if (p0.is_zero() && q0.is_zero()) throw DomainError("gcd of two zero polynomials");
  const std::size_t n = std::max(p0.nvars(), q0.nvars());
  MultiPoly p = p0.with_nvars(n), q = q0.with_nvars(n);
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return MultiPoly(n, FieldElement(1));
  if (p.is_monomial()) return monomial_gcd(p, q);
  if (q.is_monomial()) return monomial_gcd(q, p);
  if (p == q) return p.monic();

  const long hp = p.highest_variable(), hq = q.highest_variable();
  const std::size_t v = static_cast<std::size_t>(std::max(hp, hq));
  if (!p.involves(v)) return poly_gcd(p, content_in(q, v));
  if (!q.involves(v)) return poly_gcd(content_in(p, v), q);

  if (single_variable(p, v) && single_variable(q, v))
    return from_upoly(gcd(to_upoly(p, v), to_upoly(q, v)), v, n);

  MultiPoly cp = content_in(p, v), cq = content_in(q, v);
  MultiPoly c = poly_gcd(cp, cq);
  MultiPoly a = exact_quotient(p, cp), b = exact_quotient(q, cq);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  if (auto d = divide_exact(a, b)) return (c * b).monic();
  if (auto bound = gcd_degree_bound(a, b, v); bound && *bound == 0) return c.monic();
  if (auto g = interpolated_gcd(a, b)) return (c * *g).monic();
  for (;;) {
    MultiPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      b = MultiPoly(n, FieldElement(1));
      break;
    }
    a = std::move(b);
    b = exact_quotient(r, content_in(r, v)).monic();
  }
  return (c * b).monic();
}

FieldElement evaluate(const MultiPoly& p, const std::vector<FieldElement>& point) {
  FieldElement acc(0);
  for (const auto& [e, c] : p.terms()) {
    FieldElement t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point.at(i).pow(e[i]);
    acc += t;
  }
  return acc;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  std::size_t n = 0;
  for (const auto& m : images) n = std::max(n, m.nvars());
  MultiPoly acc(n);
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t(n, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers.at(i);
      if (pw.empty()) pw.push_back(MultiPoly(n, FieldElement(1)));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    acc += t;
  }
  return acc;
}

}  // namespace dfsum
