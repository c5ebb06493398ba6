#include "dfsum/summability.hpp"

#include "dfsum/errors.hpp"
#include "dfsum/format.hpp"
#include "dfsum/spread.hpp"

namespace dfsum {
namespace {

struct Ctx {
  Options opts;
  bool inexact = false;
};

SummabilityOutcome decide(const RatFunc& f, const FieldElement& c, const SigmaSpec& spec, Ctx& ctx);

SummabilityOutcome laurent_term(const RatFunc& p, long i, const FieldElement& c, const SigmaSpec& spec, Ctx& ctx) {
  const std::size_t v = spec.nvars() - 1;
  SummabilityOutcome sub = decide(p.with_nvars(v), c * spec[v].pow(i), spec.restrict(v), ctx);
  if (auto* s = std::get_if<Summable>(&sub)) {
    std::vector<long> e(v + 1, 0);
    e[v] = i;
    return Summable{s->g.with_nvars(v + 1) * laurent_monomial(e)};
  }
  if (auto* ns = std::get_if<NotSummable>(&sub)) {
    // report at the outermost level where the coefficient fails
    if (ns->obstruction.kind == Obstruction::Kind::Constant) {
      Obstruction o;
      o.kind = Obstruction::Kind::Laurent;
      o.variable = v;
      o.laurent_index = i;
      o.remainder = p;
      return NotSummable{o};
    }
  }
  return sub;
}

SummabilityOutcome fraction(const RatFunc& a, const MultiPoly& d, unsigned j, const FieldElement& c,
                            const SigmaSpec& spec, Ctx& ctx) {
  const std::size_t n = spec.nvars();
  const std::size_t v = n - 1;
  if (a.is_zero()) return Summable{RatFunc(0).with_nvars(n)};
  Obstruction fail;
  fail.kind = Obstruction::Kind::Orbit;
  fail.variable = v;
  fail.representative = d;
  fail.multiplicity = j;
  fail.remainder = a;

  SpreadResult self = spread(d, d, spec, ctx.opts);
  if (!self.complete) ctx.inexact = true;
  const long k = self.set.modulus().get_si();
  if (k == 0) return NotSummable{fail};

  const FieldElement u = orbit_unit(d, k, spec);
  const FieldElement eps = c.pow(k) * u.pow(-static_cast<long>(j));
  const SigmaSpec sub = spec.restrict(v).power(k);
  CoeffPoly ap = split_in(a, v);
  std::vector<RatFunc> bs;
  for (std::size_t i = 0; i < ap.coefficients().size(); ++i) {
    const FieldElement ci = eps * spec[v].pow(k * static_cast<long>(i));
    SummabilityOutcome r = decide(ap.coefficients()[i].with_nvars(v), ci, sub, ctx);
    if (auto* s = std::get_if<Summable>(&r)) {
      bs.push_back(s->g);
      continue;
    }
    if (std::holds_alternative<Unknown>(r)) return r;
    return NotSummable{fail};
  }
  // a = eps sigma^k(b) - b, so a/d^j = (c sigma)^k(b/d^j) - b/d^j
  const RatFunc h = join_in(CoeffPoly(bs), v) * RatFunc(d.pow(j)).inverse();
  RatFunc g = RatFunc(0).with_nvars(n);
  RatFunc term = h;
  FieldElement cm(1);
  for (long m = 0; m < k; ++m) {
    g += RatFunc(cm) * term;
    term = sigma_apply(term, spec, 1);
    cm *= c;
  }
  return Summable{g};
}

SummabilityOutcome decide(const RatFunc& f, const FieldElement& c, const SigmaSpec& spec, Ctx& ctx) {
  const std::size_t n = spec.nvars();
  if (f.is_zero()) return Summable{RatFunc(0).with_nvars(n)};
  if (n == 0) {
    const FieldElement p = f.constant_value();
    if (c.is_one()) {
      Obstruction o;
      o.remainder = f;
      return NotSummable{o};
    }
    return Summable{RatFunc(p / (c - FieldElement(1)))};
  }
  OrbitalDecomposition dec = orbital_decompose(f, spec, ctx.opts);
  if (!dec.complete) ctx.inexact = true;
  RatFunc g = RatFunc(0).with_nvars(n);
  std::optional<SummabilityOutcome> failure;
  auto absorb = [&](SummabilityOutcome r) {
    if (auto* s = std::get_if<Summable>(&r)) {
      g += s->g;
      return true;
    }
    if (!failure || std::holds_alternative<Unknown>(r)) failure = std::move(r);
    return false;
  };
  for (const auto& [i, p] : dec.laurent)
    if (!absorb(laurent_term(p, i, c, spec, ctx)) && std::holds_alternative<NotSummable>(*failure)) return *failure;
  for (const auto& comp : dec.components) {
    ShiftReduction sr = shift_reduce(comp, c, spec);
    g += sr.g;
    SummabilityOutcome r = fraction(sr.remainder, comp.representative, comp.multiplicity, c, spec, ctx);
    if (!absorb(std::move(r)) && std::holds_alternative<NotSummable>(*failure)) return *failure;
  }
  if (failure) return *failure;
  return Summable{g};
}

}  // namespace

std::string Obstruction::describe() const {
  switch (kind) {
    case Kind::Laurent:
      return "coefficient of x" + std::to_string(variable + 1) + "^" + std::to_string(laurent_index) +
             " is not summable: " + to_string(remainder);
    case Kind::Orbit:
      return "nonzero remainder " + to_string(remainder) + " over (" + to_string(representative) + ")^" +
             std::to_string(multiplicity);
    case Kind::Constant:
      break;
  }
  return "constant " + to_string(remainder) + " with c = 1";
}

ShiftReduction shift_reduce(const OrbitComponent& comp, const FieldElement& c, const SigmaSpec& spec) {
  const std::size_t n = spec.nvars();
  ShiftReduction out{RatFunc(0).with_nvars(n), RatFunc(0).with_nvars(n)};
  const RatFunc dj_inv = RatFunc(comp.representative.pow(comp.multiplicity)).inverse();
  for (const auto& [l, al] : comp.terms) {
    // h = (c sigma)^{-l}(a_l) / d^j, and (c sigma)^l(h) is the stored term
    const RatFunc a = RatFunc(c.pow(-l)) * sigma_apply(al, spec, -l);
    out.remainder += a;
    if (l == 0) continue;
    const RatFunc h = a * dj_inv;
    if (l > 0) {
      for (long i = 0; i < l; ++i) out.g += RatFunc(c.pow(i)) * sigma_apply(h, spec, i);
    } else {
      for (long i = l; i < 0; ++i) out.g -= RatFunc(c.pow(i)) * sigma_apply(h, spec, i);
    }
  }
  return out;
}

SummabilityOutcome fraction_summable(const RatFunc& a, const MultiPoly& d, unsigned j, const FieldElement& c,
                                     const SigmaSpec& spec, const Options& opts) {
  if (spec.nvars() == 0) throw DomainError("fraction needs at least one variable");
  const std::size_t v = spec.nvars() - 1;
  if (j == 0) throw DomainError("multiplicity must be positive");
  if (d.degree(v) == 0) throw DomainError("denominator must involve the last variable");
  if (d == MultiPoly::variable(spec.nvars(), v)) throw DomainError("denominator equivalent to the last variable");
  if (a.den().involves(v) || a.num().degree(v) >= d.degree(v))
    throw DomainError("numerator degree must be below the denominator degree");
  Ctx ctx{opts};
  SummabilityOutcome r = fraction(a.with_nvars(spec.nvars()), d.with_nvars(spec.nvars()), j, c, spec, ctx);
  if (ctx.inexact && std::holds_alternative<NotSummable>(r)) return Unknown{"exponent lattice search was inexact"};
  return r;
}

SummabilityOutcome laurent_summable(const RatFunc& p, long i, const FieldElement& c, const SigmaSpec& spec,
                                    const Options& opts) {
  if (spec.nvars() == 0) throw DomainError("Laurent term needs at least one variable");
  if (p.involves(spec.nvars() - 1)) throw DomainError("coefficient involves the last variable");
  Ctx ctx{opts};
  SummabilityOutcome r = laurent_term(p, i, c, spec, ctx);
  if (ctx.inexact && std::holds_alternative<NotSummable>(r)) return Unknown{"exponent lattice search was inexact"};
  return r;
}

SummabilityOutcome is_summable(const RatFunc& f, const FieldElement& c, const SigmaSpec& spec, const Options& opts) {
  if (c.is_zero()) throw DomainError("c must be nonzero");
  if (f.highest_variable() >= static_cast<long>(spec.nvars()))
    throw DomainError("function has more variables than the automorphism");
  const RatFunc ff = f.with_nvars(spec.nvars());
  Ctx ctx{opts};
  SummabilityOutcome r = decide(ff, c, spec, ctx);
  if (auto* s = std::get_if<Summable>(&r)) {
    if (delta(s->g, c, spec) != ff) throw std::logic_error("summability witness failed verification");
  } else if (ctx.inexact && std::holds_alternative<NotSummable>(r)) {
    return Unknown{"exponent lattice search was inexact"};
  }
  return r;
}

}  // namespace dfsum
