#include "dfsum/format.hpp"

#include <sstream>

namespace dfsum {
namespace {

struct Term {
  bool neg;
  std::string body;
};

std::string join(const std::vector<Term>& ts) {
  if (ts.empty()) return "0";
  std::string s = ts[0].neg ? "-" + ts[0].body : ts[0].body;
  for (std::size_t i = 1; i < ts.size(); ++i) s += (ts[i].neg ? " - " : " + ") + ts[i].body;
  return s;
}

void lcm_denominators(const FieldElement& c, Integer& l) {
  const UPoly<Rational> u = c.as_polynomial();
  for (const auto& q : u.coefficients())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
}

std::string power(const std::string& name, long k) { return k == 1 ? name : name + "^" + std::to_string(k); }

std::vector<Term> rational_poly_terms(const UPoly<Rational>& u, const std::string& name);

Term make_term(const FieldElement& c, const std::string& mono) {
  if (c.is_rational()) {
    const Rational& q = c.rational();
    Rational a = abs(q);
    if (a == 1) return {sgn(q) < 0, mono.empty() ? "1" : mono};
    return {sgn(q) < 0, a.get_str() + (mono.empty() ? "" : "*" + mono)};
  }
  auto inner = rational_poly_terms(c.as_polynomial(), c.context()->generator_name());
  if (inner.size() == 1) return {inner[0].neg, inner[0].body + (mono.empty() ? "" : "*" + mono)};
  return {false, "(" + join(inner) + ")" + (mono.empty() ? "" : "*" + mono)};
}

std::vector<Term> rational_poly_terms(const UPoly<Rational>& u, const std::string& name) {
  std::vector<Term> ts;
  const auto& c = u.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    ts.push_back(make_term(FieldElement(c[k]), k == 0 ? "" : power(name, static_cast<long>(k))));
  }
  return ts;
}

std::string exps_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += power(i < names.size() ? names[i] : "x" + std::to_string(i + 1), e[i]);
  }
  return s;
}

std::vector<Term> poly_terms(const MultiPoly& p, const std::vector<std::string>& names) {
  std::vector<Term> ts;
  for (const auto& [e, c] : p.terms()) ts.push_back(make_term(c, exps_string(e, names)));
  return ts;
}

bool needs_parens(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.size() != 1) return true;
  auto ts = poly_terms(p, names);
  return ts[0].neg || ts[0].body.find_first_of("*/(") != std::string::npos;
}

}  // namespace

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("a" + std::to_string(i + 1));
  return v;
}

std::string to_string(const FieldElement& x) {
  if (x.is_rational()) return x.rational().get_str();
  Integer l = 1;
  lcm_denominators(x, l);
  UPoly<Rational> u = x.as_polynomial() * Rational(l);
  auto ts = rational_poly_terms(u, x.context()->generator_name());
  std::string s = join(ts);
  if (l == 1) return ts.size() == 1 ? s : "(" + s + ")";
  return "(" + s + ")/" + l.get_str();
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) lcm_denominators(c, l);
  MultiPoly q = l == 1 ? p : p * FieldElement(Rational(l));
  std::string s = join(poly_terms(q, names));
  if (l == 1) return s;
  if (q.size() == 1) return s + "/" + l.get_str();
  return "(" + s + ")/" + l.get_str();
}

std::string to_string(const RatFunc& f, const std::vector<std::string>& names) {
  if (f.den().is_constant()) return to_string(f.num() * f.den().leading_coefficient().inverse(), names);
  Integer l = 1;
  for (const auto& [e, c] : f.num().terms()) lcm_denominators(c, l);
  for (const auto& [e, c] : f.den().terms()) lcm_denominators(c, l);
  MultiPoly n = f.num() * FieldElement(Rational(l));
  MultiPoly d = f.den() * FieldElement(Rational(l));
  std::string ns = join(poly_terms(n, names));
  std::string ds = join(poly_terms(d, names));
  if (n.size() > 1) ns = "(" + ns + ")";
  if (needs_parens(d, names)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::string monomial_string(const std::vector<long>& e, const std::vector<std::string>& names) {
  std::string num, den;
  std::size_t nden = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    std::string nm = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    std::string& target = e[i] > 0 ? num : den;
    if (!target.empty()) target += "*";
    target += power(nm, e[i] > 0 ? e[i] : -e[i]);
    if (e[i] < 0) ++nden;
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + "/" + (nden > 1 ? "(" + den + ")" : den);
}

}  // namespace dfsum
