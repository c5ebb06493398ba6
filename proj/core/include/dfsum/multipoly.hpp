#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dfsum/field.hpp"

namespace dfsum {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order with x_0 > x_1 > ... ; comparator puts the
// larger monomial first so that map::begin() is the leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial over F in nvars variables. Polynomials with different
// numbers of variables combine by padding the shorter exponent vectors.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, FieldElement, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  MultiPoly(std::size_t nvars, const FieldElement& c);

  static MultiPoly variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);
  static MultiPoly monomial(Exponents e, const FieldElement& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Exponents& leading_exponent() const;
  const FieldElement& leading_coefficient() const;
  FieldElement coefficient(const Exponents& e) const;
  FieldElement constant_term() const;

  unsigned total_degree() const;
  unsigned degree(std::size_t var) const;
  unsigned min_degree(std::size_t var) const;
  bool involves(std::size_t var) const;
  // index of the last variable that occurs, or -1 for constants
  long highest_variable() const;
  std::size_t support_size() const;

  // coefficient of x_var^k for k = 0..deg, each with x_var removed
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& cs, std::size_t var, std::size_t nvars);

  MultiPoly with_nvars(std::size_t n) const;
  MultiPoly monic() const;
  MultiPoly derivative(std::size_t var) const;
  MultiPoly pow(unsigned e) const;
  // shift the exponent of var (may only decrease by at most the min degree)
  MultiPoly shift_exponent(std::size_t var, long delta) const;

  void add_term(const Exponents& e, const FieldElement& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const FieldElement& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const FieldElement& s) { return a *= s; }
  friend MultiPoly operator*(const FieldElement& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  // Equality ignores trailing unused variables.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  // deterministic total order (terms in grlex order, then coefficients)
  friend int compare(const MultiPoly& a, const MultiPoly& b);
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return compare(a, b) < 0; }

 private:
  static Exponents padded(const Exponents& e, std::size_t n);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

// exact quotient a / b, or nullopt when b does not divide a
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
// divisor must divide; throws DomainError otherwise
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

// gcd normalized to leading coefficient 1
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);
// gcd of the coefficients with respect to var
MultiPoly content_in(const MultiPoly& p, std::size_t var);

FieldElement evaluate(const MultiPoly& p, const std::vector<FieldElement>& point);
// substitute x_i -> images[i]
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

}  // namespace dfsum
