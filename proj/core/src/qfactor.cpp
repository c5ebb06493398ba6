// Univariate factorization over Q: squarefree decomposition, then
// Zassenhaus (Berlekamp-free: DDF + Cantor-Zassenhaus mod p, multifactor
// quadratic Hensel lifting, exhaustive recombination).

#include "dfsum/qfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "dfsum/errors.hpp"

namespace dfsum {
namespace {

using ZPoly = std::vector<Integer>;
using Fp = std::vector<std::uint64_t>;

// ---- arithmetic in F_p[x], p < 2^31 ----

struct Zp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  void trim(Fp& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  Fp reduce(const ZPoly& f) const {
    Fp r(f.size());
    mpz_class t;
    for (std::size_t i = 0; i < f.size(); ++i) {
      mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
      r[i] = t.get_ui();
    }
    trim(r);
    return r;
  }

  Fp sub(const Fp& a, const Fp& b) const {
    Fp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  Fp mul(const Fp& a, const Fp& b) const {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  Fp scale(Fp a, std::uint64_t s) const {
    for (auto& v : a) v = mul(v, s);
    trim(a);
    return a;
  }

  Fp monic(const Fp& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  void divrem(const Fp& a, const Fp& b, Fp* q, Fp* r) const {
    Fp rr = a;
    const std::size_t db = b.size() - 1;
    Fp qq(a.size() >= b.size() ? a.size() - db : 0, 0);
    const std::uint64_t il = inv(b.back());
    for (std::size_t i = rr.size(); i-- > db;) {
      if (!rr[i]) continue;
      std::uint64_t t = mul(rr[i], il);
      qq[i - db] = t;
      for (std::size_t j = 0; j <= db; ++j) rr[i - db + j] = sub(rr[i - db + j], mul(t, b[j]));
    }
    if (rr.size() > db) rr.resize(db);
    trim(rr);
    trim(qq);
    if (q) *q = std::move(qq);
    if (r) *r = std::move(rr);
  }

  Fp rem(const Fp& a, const Fp& b) const {
    Fp r;
    divrem(a, b, nullptr, &r);
    return r;
  }
  Fp quo(const Fp& a, const Fp& b) const {
    Fp q;
    divrem(a, b, &q, nullptr);
    return q;
  }

  Fp gcd(Fp a, Fp b) const {
    while (!b.empty()) {
      Fp r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 (a, b coprime)
  void xgcd(const Fp& a, const Fp& b, Fp* s, Fp* t) const {
    Fp r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      Fp q, r;
      divrem(r0, r1, &q, &r);
      Fp s2 = sub(s0, mul(q, s1));
      Fp t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    std::uint64_t il = inv(r0.back());
    *s = scale(s0, il);
    *t = scale(t0, il);
  }

  Fp derivative(const Fp& a) const {
    if (a.size() <= 1) return {};
    Fp d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }

  Fp powmod(Fp base, const mpz_class& e, const Fp& m) const {
    Fp r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// distinct-degree factorization of a monic squarefree f
std::vector<std::pair<Fp, std::size_t>> ddf(const Zp& F, Fp f) {
  std::vector<std::pair<Fp, std::size_t>> out;
  const Fp x{0, 1};
  Fp h = x;
  for (std::size_t i = 1; f.size() - 1 >= 2 * i; ++i) {
    h = F.powmod(h, mpz_class(F.p), f);
    Fp g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, f.size() - 1);
  return out;
}

// equal-degree splitting (odd p)
void edf(const Zp& F, const Fp& g, std::size_t d, std::mt19937_64& rng, std::vector<Fp>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  for (;;) {
    Fp a(n);
    for (auto& v : a) v = dist(rng);
    F.trim(a);
    if (a.size() <= 1) continue;
    Fp b = F.powmod(a, e, g);
    Fp h = F.gcd(F.sub(b, Fp{1}), g);
    if (h.size() > 1 && h.size() < g.size()) {
      edf(F, h, d, rng, out);
      edf(F, F.quo(g, h), d, rng, out);
      return;
    }
  }
}

// ---- integer polynomials modulo m ----

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zmod(std::move(r), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zmod(std::move(r), m);
}

ZPoly zmul_raw(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(zmul_raw(a, b), m); }

ZPoly zscale(ZPoly a, const Integer& s, const Integer& m) {
  for (auto& v : a) v *= s;
  return zmod(std::move(a), m);
}

// division by a monic polynomial modulo m
void zdivrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly* q, ZPoly* r) {
  ZPoly rr = zmod(a, m);
  const std::size_t db = b.size() - 1;
  ZPoly qq(rr.size() > db ? rr.size() - db : 0, 0);
  for (std::size_t i = rr.size(); i-- > db;) {
    mpz_fdiv_r(rr[i].get_mpz_t(), rr[i].get_mpz_t(), m.get_mpz_t());
    if (sgn(rr[i]) == 0) continue;
    Integer t = rr[i];
    qq[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rr[i - db + j] -= t * b[j];
  }
  if (rr.size() > db) rr.resize(db);
  if (q) *q = zmod(std::move(qq), m);
  if (r) *r = zmod(std::move(rr), m);
}

ZPoly lift_fp(const Fp& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Produces the same relations modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  ZPoly q, r;
  zdivrem_monic(zmul(s, e, m2), h, m2, &q, &r);
  ZPoly g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
  ZPoly h2 = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{1}, m2);
  ZPoly c, d;
  zdivrem_monic(zmul(s, b, m2), h2, m2, &c, &d);
  s = zsub(s, d, m2);
  t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod facs (mod p) to monic factors modulo p^(2^steps).
void lift_tree(const ZPoly& f, const std::vector<Fp>& facs, const Zp& F, unsigned steps,
               const Integer& modulus, std::vector<ZPoly>& out) {
  if (facs.size() == 1) {
    Integer il;
    mpz_invert(il.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    out.push_back(zscale(f, il, modulus));
    return;
  }
  const std::size_t half = facs.size() / 2;
  std::vector<Fp> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
  Fp g0 = F.reduce(ZPoly{f.back()});
  for (const auto& u : left) g0 = F.mul(g0, u);
  Fp h0{1};
  for (const auto& u : right) h0 = F.mul(h0, u);
  Fp s0, t0;
  F.xgcd(g0, h0, &s0, &t0);
  ZPoly g = lift_fp(g0), h = lift_fp(h0), s = lift_fp(s0), t = lift_fp(t0);
  Integer m(static_cast<unsigned long>(F.p));
  for (unsigned i = 0; i < steps; ++i) {
    m *= m;
    hensel_step(zmod(f, m), g, h, s, t, m);
  }
  lift_tree(g, left, F, steps, modulus, out);
  lift_tree(h, right, F, steps, modulus, out);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& v : a) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  ztrim(a);
  return a;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly a) {
  Integer c = zcontent(a);
  if (sgn(a.back()) < 0) c = -c;
  if (c != 0 && c != 1)
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return a;
}

std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer t = r[i] / b.back();
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  ztrim(q);
  return q;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f primitive, squarefree, deg >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return {f};

  // smallest odd prime keeping f squarefree modulo p
  std::uint64_t p = 3;
  Zp F{p};
  Fp fp;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    F = Zp{p};
    fp = F.reduce(f);
    if (F.gcd(fp, F.derivative(fp)).size() == 1) break;
  }

  std::vector<Fp> facs;
  std::mt19937_64 rng(0x5eedULL);
  for (auto& [g, d] : ddf(F, F.monic(fp))) edf(F, g, d, rng, facs);
  if (facs.size() == 1) return {f};

  // coefficient bound for factors of lc(f) * f
  Integer norm2 = 0;
  Integer amax = 0;
  for (const auto& v : f) {
    norm2 += v * v;
    if (abs(v) > amax) amax = abs(v);
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
  root += 1;
  Integer bound = root * amax * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Integer target = 2 * bound + 1;

  unsigned steps = 0;
  Integer modulus(static_cast<unsigned long>(p));
  while (modulus <= target) {
    modulus *= modulus;
    ++steps;
  }

  std::vector<ZPoly> lifted;
  lift_tree(f, facs, F, steps, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  for (std::size_t k = 1; 2 * k <= alive.size();) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{rest.back()};
      for (std::size_t i : idx) g = zmul(g, lifted[alive[i]], modulus);
      g = primitive(symmetric(g, modulus));
      bool ok = true;
      if (sgn(rest[0]) != 0 && sgn(g[0]) != 0 && !mpz_divisible_p(rest[0].get_mpz_t(), g[0].get_mpz_t()))
        ok = false;
      std::optional<ZPoly> q;
      if (ok) q = zdiv_exact(rest, g);
      if (q) {
        result.push_back(g);
        rest = *q;
        std::vector<std::size_t> next;
        for (std::size_t i = 0, j = 0; i < alive.size(); ++i) {
          if (j < k && idx[j] == i) {
            ++j;
            continue;
          }
          next.push_back(alive[i]);
        }
        alive = std::move(next);
        found = true;
        break;
      }
      if (!next_combination(idx, alive.size())) break;
    }
    if (!found) ++k;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  return result;
}

ZPoly to_primitive_z(const QPoly& a) {
  Integer l = 1;
  for (const auto& c : a.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(a.coefficients().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rational v = a.coefficients()[i] * l;
    z[i] = v.get_num();
  }
  return primitive(std::move(z));
}

QPoly to_monic_q(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    c[i] = Rational(z[i], z.back());
    c[i].canonicalize();
  }
  return QPoly(std::move(c));
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

}  // namespace

QFactorization factor_rational_poly(const QPoly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  QFactorization out;
  out.unit = f.lc();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : zassenhaus(to_primitive_z(part))) out.factors.emplace_back(to_monic_q(z), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible_rational(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_rational_poly(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace dfsum
