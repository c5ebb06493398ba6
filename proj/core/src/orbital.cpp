#include "dfsum/orbital.hpp"

#include <algorithm>

#include "dfsum/errors.hpp"
#include "dfsum/factorization.hpp"
#include "dfsum/spread.hpp"

namespace dfsum {
namespace {

RatFunc x_power(std::size_t var, long i) {
  std::vector<long> e(var + 1, 0);
  e[var] = i;
  return laurent_monomial(e);
}

struct Member {
  MultiPoly poly;
  unsigned mult;
  CoeffPoly xpoly;  // poly as a monic polynomial in x over K
  RatFunc lc;       // leading coefficient of poly in x
};

}  // namespace

CoeffPoly split_in(const RatFunc& f, std::size_t var) {
  if (f.den().involves(var)) throw DomainError("denominator involves the split variable");
  const std::size_t n = std::max(f.nvars(), var + 1);
  std::vector<MultiPoly> cs = f.num().with_nvars(n).coefficients_in(var);
  const RatFunc den = RatFunc(f.den()).with_nvars(n);
  std::vector<RatFunc> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back((RatFunc(c) / den).with_nvars(var));
  return CoeffPoly(std::move(out));
}

RatFunc join_in(const CoeffPoly& p, std::size_t var) {
  RatFunc r = RatFunc(0).with_nvars(var + 1);
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) r += cs[i].with_nvars(var + 1) * x_power(var, static_cast<long>(i));
  return r;
}

OrbitalDecomposition orbital_decompose(const RatFunc& f0, const SigmaSpec& spec, const Options& opts) {
  const std::size_t n = spec.nvars();
  if (n == 0) throw DomainError("orbital decomposition needs at least one variable");
  if (f0.nvars() > n && f0.highest_variable() >= static_cast<long>(n))
    throw DomainError("function has more variables than the automorphism");
  const std::size_t v = n - 1;
  const RatFunc f = f0.with_nvars(n);
  OrbitalDecomposition out;
  out.spec = spec;
  if (f.is_zero()) return out;

  Factorization fac = factor_wrt_last_var(f.den(), v, opts);
  const MultiPoly xv = MultiPoly::variable(n, v);
  unsigned xmult = 0;
  std::vector<Member> members;
  for (auto& [p, e] : fac.factors) {
    MultiPoly pn = p.with_nvars(n);
    if (pn == xv) {
      xmult = e;
      continue;
    }
    CoeffPoly cp = split_in(RatFunc(pn), v);
    RatFunc lc = cp.lc();
    members.push_back({pn, e, monic(cp), lc});
  }

  // numerator over K = F(x_1..x_{n-1}) with the content and leading coefficients divided out
  RatFunc scaled = RatFunc(f.num()) / fac.content;
  for (const auto& m : members) scaled = scaled / m.lc.with_nvars(n).pow(m.mult);
  CoeffPoly num = split_in(scaled, v);
  CoeffPoly full = CoeffPoly::monomial(RatFunc(1), xmult);
  std::vector<CoeffPoly> powers;
  for (const auto& m : members) {
    powers.push_back(pow(m.xpoly, m.mult));
    full = full * powers.back();
  }
  auto [poly_part, rem_all] = divrem(num, full);
  for (std::size_t i = 0; i < poly_part.coefficients().size(); ++i)
    if (!poly_part.coefficients()[i].is_zero()) out.laurent[static_cast<long>(i)] = poly_part.coefficients()[i];

  // pieces over coprime prime powers: R_k = R * (Q/Q_k)^{-1} mod Q_k
  auto piece = [&](const CoeffPoly& qk) {
    CoeffPoly cof = divrem(full, qk).first;
    Xgcd<RatFunc> x = xgcd(rem(cof, qk), qk);
    return rem(rem_all * x.s, qk);
  };
  if (xmult) {
    CoeffPoly r0 = members.empty() ? rem_all : piece(CoeffPoly::monomial(RatFunc(1), xmult));
    for (std::size_t i = 0; i < r0.coefficients().size(); ++i)
      if (!r0.coefficients()[i].is_zero()) out.laurent[static_cast<long>(i) - static_cast<long>(xmult)] = r0.coefficients()[i];
  }

  // group members into orbits
  struct Orbit {
    std::vector<std::size_t> idx;
  };
  std::vector<Orbit> orbits;
  for (std::size_t k = 0; k < members.size(); ++k) {
    bool placed = false;
    for (auto& o : orbits) {
      SpreadResult s = spread(members[o.idx.front()].poly, members[k].poly, spec, opts);
      out.complete = out.complete && s.complete;
      if (!s.set.is_empty()) {
        o.idx.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) orbits.push_back({{k}});
  }

  std::map<std::pair<MultiPoly, unsigned>, OrbitComponent> comps;
  for (const auto& o : orbits) {
    const MultiPoly& base = members[o.idx.front()].poly;
    SpreadResult self = spread(base, base, spec, opts);
    out.complete = out.complete && self.complete;
    const long period = self.set.modulus().get_si();
    MultiPoly rep;
    if (period > 0) {
      rep = periodic_representative(base, period, spec).poly;
    } else {
      // earliest member: every other one is a forward shift of it
      long best = 0;
      rep = base;
      for (std::size_t t : o.idx) {
        long s = spread(base, members[t].poly, spec, opts).set.offset().get_si();
        if (s < best) best = s, rep = members[t].poly;
      }
    }
    for (std::size_t t : o.idx) {
      const Member& m = members[t];
      SpreadResult s = spread(rep, m.poly, spec, opts);
      if (s.set.is_empty()) throw std::logic_error("orbit member lost its shift");
      const long l = s.set.offset().get_si();
      // sigma^l(rep) = u * m.poly and m.poly = lc * m.xpoly
      const RatFunc scale = m.lc * RatFunc(*s.witness_unit);
      CoeffPoly qk = powers[t];
      CoeffPoly rk = (members.size() == 1 && !xmult) ? rem_all : piece(qk);
      // expand rk in powers of m.xpoly: rk = sum c_i P^i, giving c_i / P^(mult - i)
      for (unsigned i = 0; i < m.mult && !rk.is_zero(); ++i) {
        auto [q, r] = divrem(rk, m.xpoly);
        rk = q;
        if (r.is_zero()) continue;
        const unsigned j = m.mult - i;
        RatFunc a = join_in(r, v) * scale.pow(j).with_nvars(n);
        OrbitComponent& c = comps[{rep, j}];
        c.representative = rep;
        c.multiplicity = j;
        c.period = period;
        c.terms[l] = a;
      }
    }
  }
  for (auto& [key, c] : comps) out.components.push_back(std::move(c));
  return out;
}

RatFunc component_value(const OrbitComponent& c, const SigmaSpec& spec) {
  RatFunc r = RatFunc(0).with_nvars(spec.nvars());
  for (const auto& [l, a] : c.terms) {
    MultiPoly d = sigma_apply(c.representative, spec, l).pow(c.multiplicity);
    r += a * RatFunc(d).inverse();
  }
  return r;
}

RatFunc recompose(const OrbitalDecomposition& d) {
  const std::size_t n = d.spec.nvars();
  RatFunc r = RatFunc(0).with_nvars(n);
  if (n == 0) return r;
  for (const auto& [i, p] : d.laurent) r += p.with_nvars(n) * x_power(n - 1, i);
  for (const auto& c : d.components) r += component_value(c, d.spec);
  return r;
}

}  // namespace dfsum
