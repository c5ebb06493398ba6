#include "dfsum/spread.hpp"

#include <algorithm>

#include "dfsum/errors.hpp"

namespace dfsum {
namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw CapabilityError("spread offset does not fit a machine integer");
  return z.get_si();
}

bool same_support(const MultiPoly& p, const MultiPoly& q) {
  if (p.size() != q.size()) return false;
  const std::size_t n = std::max(p.nvars(), q.nvars());
  MultiPoly a = p.with_nvars(n), b = q.with_nvars(n);
  auto ia = a.terms().begin();
  for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib)
    if (ia->first != ib->first) return false;
  return true;
}

IntVector exps_vector(const Exponents& e, std::size_t n) {
  IntVector v(n, 0);
  for (std::size_t i = 0; i < e.size() && i < n; ++i) v[i] = static_cast<unsigned long>(e[i]);
  return v;
}

SpreadResult finish(const MultiPoly& p, const MultiPoly& q, const SigmaSpec& spec, Progression set, bool complete) {
  SpreadResult r;
  r.set = std::move(set);
  r.complete = complete;
  if (!r.set.is_empty()) {
    const long k0 = to_long(r.set.offset());
    MultiPoly sp = sigma_apply(p, spec, k0);
    FieldElement u = sp.leading_coefficient() / q.leading_coefficient();
    if (sp != q * u) throw std::logic_error("spread witness failed verification");
    r.witness_unit = u;
  }
  return r;
}

}  // namespace

TwoTermSpread spread_two_term(const MultiPoly& p0, const MultiPoly& q0, const SigmaSpec& spec, const Options& opts) {
  if (p0.is_zero() || q0.is_zero()) throw DomainError("spread of the zero polynomial");
  if (p0.size() > 2 || q0.size() > 2) throw DomainError("two-term spread needs at most two terms");
  TwoTermSpread out;
  if (!same_support(p0, q0)) {
    out.result.set = Progression::empty();
    return out;
  }
  if (p0.size() == 1) {
    out.result = finish(p0, q0, spec, Progression::all(), true);
    return out;
  }
  const std::size_t n = spec.nvars();
  MultiPoly p = p0.monic().with_nvars(n), q = q0.monic().with_nvars(n);
  const Exponents m = p.leading_exponent();
  const Exponents i = std::next(p.terms().begin())->first;
  const FieldElement beta = p.coefficient(i) / q.coefficient(i);

  ExponentLattice lat = exponent_lattice(spec.multipliers(), opts);
  MultiplicativeDecomposition dec = multiplicative_decompose(beta, spec.multipliers(), opts);
  const bool complete = lat.exact && dec.exact;

  out.matrix = IntMatrix(n, lat.rank() + 1);
  IntVector mv = exps_vector(m, n), iv = exps_vector(i, n);
  for (std::size_t r = 0; r < n; ++r) {
    out.matrix(r, 0) = mv[r] - iv[r];
    for (std::size_t j = 0; j < lat.rank(); ++j) out.matrix(r, j + 1) = -lat.basis(j, r);
  }
  if (!dec.exponents) {
    out.result.set = Progression::empty();
    out.result.complete = complete;
    return out;
  }
  const IntVector I = reduce_modulo(*dec.exponents, lat);
  out.rhs = I;
  out.solutions = solve_integer(out.matrix, I);
  if (!out.solutions.particular) {
    out.result.set = Progression::empty();
    out.result.complete = complete;
    return out;
  }
  Integer l0 = 0;
  for (const auto& kv : out.solutions.kernel_basis) mpz_gcd(l0.get_mpz_t(), l0.get_mpz_t(), kv[0].get_mpz_t());
  out.result = finish(p, q, spec, Progression::arith((*out.solutions.particular)[0], l0), complete);
  return out;
}

SpreadResult spread_pair_singleterm(const MultiPoly& p, const MultiPoly& q, const SigmaSpec& spec,
                                    const Options& opts) {
  return spread_two_term(p, q, spec, opts).result;
}

SpreadResult spread(const MultiPoly& p0, const MultiPoly& q0, const SigmaSpec& spec, const Options& opts) {
  if (p0.is_zero() || q0.is_zero()) throw DomainError("spread of the zero polynomial");
  const std::size_t n = std::max({p0.nvars(), q0.nvars(), spec.nvars()});
  if (n > spec.nvars()) throw DomainError("polynomial has more variables than the automorphism");
  MultiPoly p = p0.with_nvars(n), q = q0.with_nvars(n);
  SpreadResult none;
  none.set = Progression::empty();
  if (!same_support(p, q)) return none;
  if (p.size() == 1) return finish(p, q, spec, Progression::all(), true);

  MultiPoly pm = p.monic(), qm = q.monic();
  const Exponents m = pm.leading_exponent();
  const FieldElement lm = spec.eigenvalue(m);
  std::vector<Exponents> lower;
  for (auto it = std::next(pm.terms().begin()); it != pm.terms().end(); ++it) lower.push_back(it->first);
  std::reverse(lower.begin(), lower.end());  // ascending order

  Progression cur = Progression::all();
  FieldElement c0(1), c1 = lm;
  bool complete = true;
  for (const auto& i : lower) {
    const FieldElement pi = pm.coefficient(i), qi = qm.coefficient(i);
    const FieldElement li = spec.eigenvalue(i);
    const long k0 = to_long(cur.offset());
    const long l0 = to_long(cur.modulus());
    const bool keeps_offset = pi * li.pow(k0) == c0 * qi;
    const bool keeps_period = l0 == 0 || pi * li.pow(l0) == c1 * pi;
    if (keeps_offset && keeps_period) continue;

    MultiPoly pt = MultiPoly::monomial(m, FieldElement(1)) + MultiPoly::monomial(i, pi);
    MultiPoly qt = MultiPoly::monomial(m, FieldElement(1)) + MultiPoly::monomial(i, qi);
    SpreadResult sub = spread_pair_singleterm(pt, qt, spec, opts);
    complete = complete && sub.complete;
    cur = progression_intersect(cur, sub.set);
    if (cur.is_empty()) {
      none.complete = complete;
      return none;
    }
    c0 = lm.pow(to_long(cur.offset()));
    c1 = lm.pow(to_long(cur.modulus()));
  }
  return finish(p, q, spec, cur, complete);
}

FieldElement orbit_unit(const MultiPoly& d, long k, const SigmaSpec& spec) {
  if (d.is_zero()) throw DomainError("orbit unit of the zero polynomial");
  MultiPoly s = sigma_apply(d, spec, k);
  FieldElement u = s.leading_coefficient() / d.leading_coefficient();
  if (s != d * u) throw DomainError("shift is not in the self-spread");
  return u;
}

Representative periodic_representative(const MultiPoly& d, long period, const SigmaSpec& spec) {
  if (period <= 0) throw DomainError("period must be positive");
  Representative best{d.monic(), 0};
  for (long s = 1; s < period; ++s) {
    MultiPoly c = sigma_apply(d, spec, s).monic();
    if (c < best.poly) best = {c, s};
  }
  return best;
}

}  // namespace dfsum
