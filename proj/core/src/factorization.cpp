#include "dfsum/factorization.hpp"

#include <algorithm>

#include "dfsum/errors.hpp"

namespace dfsum {
namespace {

using FPoly = UPoly<FieldElement>;

FieldCtxPtr context_of(const FPoly& p) {
  for (const auto& c : p.coefficients())
    if (!c.is_rational()) return c.context();
  return nullptr;
}

QPoly to_qpoly(const FPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p.coefficients()) c.push_back(v.rational());
  return QPoly(std::move(c));
}

FPoly to_fpoly(const QPoly& p) {
  std::vector<FieldElement> c;
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return FPoly(std::move(c));
}

// Newton interpolation through (i, values[i]), i = 0..n-1
QPoly interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
  QPoly acc = QPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    QPoly lin(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    acc = acc * lin + QPoly::constant(dd[i]);
  }
  return acc;
}

// Res_t(m(t), b(x, t)) as a polynomial in x
QPoly norm(const FPoly& b, const FieldCtxPtr& ctx) {
  const std::size_t deg = static_cast<std::size_t>(b.degree()) * ctx->degree();
  std::vector<Rational> values;
  for (std::size_t i = 0; i <= deg; ++i) {
    FieldElement v = evaluate(b, FieldElement(static_cast<long>(i)));
    values.push_back(resultant(ctx->minimal_polynomial(), v.as_polynomial()));
  }
  return interpolate(values);
}

// Trager's algorithm for a monic squarefree polynomial over Q(theta)
std::vector<FPoly> factor_squarefree_nf(const FPoly& b, const FieldCtxPtr& ctx) {
  if (b.degree() <= 1) return {b};
  const FieldElement theta = FieldElement::generator(ctx);
  for (long k = 0; k < 64; ++k) {
    long s = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    FPoly shifted = compose(b, FPoly(std::vector<FieldElement>{theta * FieldElement(-s), FieldElement(1)}));
    QPoly n = norm(shifted, ctx);
    if (gcd(n, derivative(n)).degree() > 0) continue;
    std::vector<FPoly> out;
    FPoly back(std::vector<FieldElement>{theta * FieldElement(s), FieldElement(1)});
    for (const auto& [ni, mult] : factor_rational_poly(n).factors) {
      FPoly g = gcd(shifted, to_fpoly(ni));
      if (g.degree() > 0) out.push_back(monic(compose(g, back)));
    }
    return out;
  }
  throw CapabilityError("no squarefree norm found for number-field factorization");
}

std::vector<FPoly> factor_squarefree(const FPoly& b, FieldCtxPtr ctx = nullptr) {
  if (!ctx) ctx = context_of(b);
  if (!ctx || ctx->degree() == 1) {
    std::vector<FPoly> out;
    if (ctx) throw CapabilityError("degenerate number field");
    for (const auto& [f, m] : factor_rational_poly(to_qpoly(b)).factors) out.push_back(to_fpoly(f));
    return out;
  }
  return factor_squarefree_nf(b, ctx);
}

FPoly univariate_image(const MultiPoly& p, std::size_t var) {
  std::vector<FieldElement> c(p.degree(var) + 1, FieldElement(0));
  for (const auto& [e, v] : p.terms()) c[e[var]] = v;
  return FPoly(std::move(c));
}

MultiPoly from_univariate(const FPoly& u, std::size_t var, std::size_t nvars) {
  MultiPoly r(nvars);
  for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
    Exponents e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(k);
    r.add_term(e, u.coefficients()[k]);
  }
  return r;
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

// irreducible factors of a squarefree polynomial, via Kronecker substitution
std::vector<MultiPoly> factor_squarefree_multi(const MultiPoly& s, const Options& opts) {
  const std::size_t n = s.nvars();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < n; ++v)
    if (s.involves(v)) vars.push_back(v);
  if (vars.empty()) return {};
  if (vars.size() == 1) {
    std::vector<MultiPoly> out;
    for (const auto& f : factor_squarefree(monic(univariate_image(s, vars[0]))))
      out.push_back(from_univariate(f, vars[0], n));
    return out;
  }
  if (s.total_degree() > opts.degree_cap || vars.size() > opts.max_support_vars)
    throw CapabilityError("multivariate factorization beyond the degree/variable cap (total degree " +
                          std::to_string(s.total_degree()) + ", " + std::to_string(vars.size()) + " variables)");

  std::vector<std::uint64_t> radix(vars.size()), weight(vars.size());
  std::uint64_t w = 1;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    radix[j] = s.degree(vars[j]) + 1;
    weight[j] = w;
    w *= radix[j];
  }
  if (w > 200000) throw CapabilityError("Kronecker substitution degree too large");

  std::vector<FieldElement> img(w, FieldElement(0));
  for (const auto& [e, c] : s.terms()) {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < vars.size(); ++j) k += e[vars[j]] * weight[j];
    img[k] = c;
  }
  FPoly image(std::move(img));

  std::vector<FPoly> entries;
  for (const auto& [part, mult] : squarefree_decomposition(image))
    for (const auto& f : factor_squarefree(part))
      for (unsigned i = 0; i < mult; ++i) entries.push_back(f);

  auto inverse = [&](const FPoly& u) {
    MultiPoly r(n);
    for (std::size_t k = 0; k < u.coefficients().size(); ++k) {
      if (u.coefficients()[k].is_zero()) continue;
      Exponents e(n, 0);
      std::uint64_t rest = k;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        e[vars[j]] = static_cast<std::uint32_t>(rest % radix[j]);
        rest /= radix[j];
      }
      if (rest) return MultiPoly(n);  // exponent overflow: not a factor
      r.add_term(e, u.coefficients()[k]);
    }
    return r;
  };

  std::vector<MultiPoly> out;
  MultiPoly rest = s;
  for (std::size_t k = 1; 2 * k <= entries.size();) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      FPoly prod = FPoly::constant(FieldElement(1));
      for (std::size_t i : idx) prod = prod * entries[i];
      MultiPoly cand = inverse(prod);
      if (cand.is_zero() || cand.is_constant()) continue;
      auto q = divide_exact(rest, cand);
      if (!q) continue;
      out.push_back(cand.monic());
      rest = *q;
      std::vector<FPoly> left;
      for (std::size_t i = 0, j = 0; i < entries.size(); ++i) {
        if (j < k && idx[j] == i) {
          ++j;
          continue;
        }
        left.push_back(entries[i]);
      }
      entries = std::move(left);
      found = true;
      break;
    } while (next_combination(idx, entries.size()));
    if (!found) ++k;
  }
  if (!rest.is_constant()) out.push_back(rest.monic());
  return out;
}

}  // namespace

RatFunc Factorization::expand() const {
  RatFunc r = content;
  for (const auto& [f, k] : factors) r *= RatFunc(f.pow(k));
  return r;
}

QFactorization factor_univariate_rational(const QPoly& p) { return factor_rational_poly(p); }

std::vector<std::pair<FPoly, unsigned>> factor_univariate(const FPoly& p, const FieldCtxPtr& field) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  FieldCtxPtr own = context_of(p);
  if (field && own && !field->same_field(*own)) throw DomainError("coefficients lie in a different number field");
  std::vector<std::pair<FPoly, unsigned>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p))
    for (const auto& f : factor_squarefree(part, field)) out.emplace_back(f, mult);
  return out;
}

std::vector<std::pair<MultiPoly, unsigned>> squarefree_in(const MultiPoly& p, std::size_t var) {
  std::vector<std::pair<MultiPoly, unsigned>> out;
  if (!p.involves(var)) return out;
  MultiPoly dp = p.derivative(var);
  MultiPoly a0 = poly_gcd(p, dp);
  MultiPoly b = exact_quotient(p, a0);
  MultiPoly c = exact_quotient(dp, a0);
  MultiPoly d = c - b.derivative(var);
  for (unsigned i = 1; b.involves(var); ++i) {
    MultiPoly a = d.is_zero() ? b.monic() : poly_gcd(b, d);
    if (a.involves(var)) out.emplace_back(a.monic(), i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative(var);
  }
  return out;
}

Factorization factor_wrt_last_var(const MultiPoly& q, std::size_t var, const Options& opts) {
  if (q.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out;
  if (var >= q.nvars() || !q.involves(var)) {
    out.content = RatFunc(q);
    return out;
  }
  MultiPoly cont = content_in(q, var);
  MultiPoly prim = exact_quotient(q, cont);
  for (const auto& [part, mult] : squarefree_in(prim, var))
    for (const auto& f : factor_squarefree_multi(part, opts)) out.factors.emplace_back(f, mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  MultiPoly prod(q.nvars(), FieldElement(1));
  for (const auto& [f, k] : out.factors) prod = prod * f.pow(k);
  out.content = RatFunc(exact_quotient(q, prod));
  return out;
}

}  // namespace dfsum
