#include "dfsum/exponent_lattice.hpp"

#include <algorithm>

#include "dfsum/errors.hpp"

namespace dfsum {
namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw CapabilityError("exponent does not fit a machine integer");
  return z.get_si();
}

// Pairwise coprime integers > 1 that multiplicatively generate all inputs.
std::vector<Integer> coprime_base(std::vector<Integer> xs) {
  std::vector<Integer> base;
  for (auto& x : xs) {
    x = abs(x);
    if (x > 1) base.push_back(x);
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        Integer a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const Integer& v : {a, b, g})
          if (v > 1) base.push_back(v);
        changed = true;
      }
    }
  }
  return base;
}

long valuation(Integer x, const Integer& b) {
  long k = 0;
  x = abs(x);
  while (x != 0 && mpz_divisible_p(x.get_mpz_t(), b.get_mpz_t())) {
    x /= b;
    ++k;
  }
  return k;
}

ExponentLattice rational_lattice(const std::vector<Rational>& lambda) {
  const std::size_t n = lambda.size();
  std::vector<Integer> parts;
  for (const auto& q : lambda) {
    parts.push_back(q.get_num());
    parts.push_back(q.get_den());
  }
  std::vector<Integer> base = coprime_base(parts);

  ExponentLattice out;
  if (n == 0) {
    out.basis = IntMatrix(0, 0);
    return out;
  }
  // valuation matrix, one row per base element
  IntMatrix e(base.size(), n);
  for (std::size_t b = 0; b < base.size(); ++b)
    for (std::size_t i = 0; i < n; ++i)
      e(b, i) = valuation(lambda[i].get_num(), base[b]) - valuation(lambda[i].get_den(), base[b]);

  std::vector<IntVector> kernel;
  if (base.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector v(n, 0);
      v[i] = 1;
      kernel.push_back(v);
    }
  } else {
    kernel = solve_integer(e, IntVector(base.size(), 0)).kernel_basis;
  }
  if (kernel.empty()) {
    out.basis = IntMatrix(0, n);
    return out;
  }

  // parity of the sign: sum_j i_j [lambda_j < 0] must be even
  const std::size_t s = kernel.size();
  IntMatrix parity(1, s + 1);
  for (std::size_t k = 0; k < s; ++k) {
    Integer t = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(lambda[j]) < 0) t += kernel[k][j];
    parity(0, k) = t;
  }
  parity(0, s) = 2;
  std::vector<IntVector> gens;
  for (const auto& c : solve_integer(parity, IntVector{0}).kernel_basis) {
    IntVector v(n, 0);
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t j = 0; j < n; ++j) v[j] += c[k] * kernel[k][j];
    gens.push_back(v);
  }
  out.basis = hnf(IntMatrix::from_rows(gens, n));
  return out;
}

std::size_t box_size(std::size_t n, int bound) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(2 * bound + 1);
    if (total > 5000000) throw CapabilityError("exponent search box too large; lower the search bound");
  }
  return total;
}

// Calls visit(exponents, value) for every vector in [-B, B]^n, in shells of
// increasing max-norm; stops early when visit returns false.
template <class Visit>
void box_search(const std::vector<FieldElement>& lambda, int bound, Visit visit) {
  const std::size_t n = lambda.size();
  box_size(n, bound);
  std::vector<std::vector<FieldElement>> pw(n);
  for (std::size_t j = 0; j < n; ++j)
    for (int k = -bound; k <= bound; ++k) pw[j].push_back(lambda[j].pow(k));
  for (int r = 0; r <= bound; ++r) {
    std::vector<int> e(n, -r);
    for (;;) {
      bool on_shell = false;
      for (int v : e) on_shell = on_shell || v == r || v == -r;
      if (on_shell || n == 0) {
        FieldElement val(1);
        IntVector iv(n);
        for (std::size_t j = 0; j < n; ++j) {
          val *= pw[j][static_cast<std::size_t>(e[j] + bound)];
          iv[j] = e[j];
        }
        if (!visit(iv, val)) return;
      }
      std::size_t j = n;
      while (j > 0 && e[j - 1] == r) {
        e[j - 1] = -r;
        --j;
      }
      if (j == 0) break;
      ++e[j - 1];
    }
    if (n == 0) return;
  }
}

bool all_rational(const std::vector<FieldElement>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const FieldElement& x) { return x.is_rational(); });
}

}  // namespace

FieldElement power_product(const std::vector<FieldElement>& lambda, const IntVector& e) {
  if (e.size() != lambda.size()) throw DomainError("exponent vector length mismatch");
  FieldElement r(1);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) r *= lambda[i].pow(to_long(e[i]));
  return r;
}

bool ExponentLattice::contains(const IntVector& v) const {
  if (basis.rows() == 0) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
  IntMatrix bt = basis.transpose();
  return solve_integer(bt, v).particular.has_value();
}

ExponentLattice exponent_lattice(const std::vector<FieldElement>& lambda, const Options& opts) {
  for (const auto& l : lambda)
    if (l.is_zero()) throw DomainError("multiplier must be nonzero");
  if (all_rational(lambda)) {
    std::vector<Rational> q;
    for (const auto& l : lambda) q.push_back(l.rational());
    return rational_lattice(q);
  }
  const std::size_t n = lambda.size();
  std::vector<IntVector> rel;
  box_search(lambda, opts.search_bound, [&](const IntVector& e, const FieldElement& v) {
    if (v.is_one()) rel.push_back(e);
    return true;
  });
  ExponentLattice out;
  out.exact = false;
  out.basis = hnf(IntMatrix::from_rows(rel, n));
  return out;
}

MultiplicativeDecomposition multiplicative_decompose(const FieldElement& beta, const std::vector<FieldElement>& lambda,
                                                     const Options& opts) {
  if (beta.is_zero()) throw DomainError("cannot decompose zero");
  MultiplicativeDecomposition out;
  const std::size_t n = lambda.size();
  if (all_rational(lambda)) {
    if (!beta.is_rational()) return out;  // powers of rationals stay rational
    std::vector<FieldElement> ext = lambda;
    ext.push_back(beta);
    ExponentLattice lat = exponent_lattice(ext, opts);
    if (lat.rank() == 0) return out;
    IntMatrix last(1, lat.rank());
    for (std::size_t k = 0; k < lat.rank(); ++k) last(0, k) = lat.basis(k, n);
    auto sol = solve_integer(last, IntVector{-1});
    if (!sol.particular) return out;
    IntVector e(n, 0);
    for (std::size_t k = 0; k < lat.rank(); ++k)
      for (std::size_t j = 0; j < n; ++j) e[j] += (*sol.particular)[k] * lat.basis(k, j);
    if (power_product(lambda, e) != beta) throw std::logic_error("multiplicative decomposition failed verification");
    out.exponents = std::move(e);
    return out;
  }
  out.exact = false;
  box_search(lambda, opts.search_bound, [&](const IntVector& e, const FieldElement& v) {
    if (v == beta) {
      out.exponents = e;
      return false;
    }
    return true;
  });
  return out;
}

IntVector reduce_modulo(const IntVector& v, const ExponentLattice& lat) {
  IntVector r = v;
  for (std::size_t j = 0; j < lat.rank(); ++j) {
    std::size_t pc = 0;
    while (lat.basis(j, pc) == 0) ++pc;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r[pc].get_mpz_t(), lat.basis(j, pc).get_mpz_t());
    for (std::size_t c = 0; c < r.size(); ++c) r[c] -= q * lat.basis(j, c);
  }
  return r;
}

}  // namespace dfsum
