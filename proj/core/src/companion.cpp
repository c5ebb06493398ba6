#include "dfsum/companion.hpp"

#include <algorithm>
#include <map>

#include "dfsum/errors.hpp"
#include "dfsum/factorization.hpp"

namespace dfsum {
namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const FieldElement inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// all exponent vectors of total degree d in n variables
void monomials_of_degree(std::size_t n, unsigned d, Exponents& cur, std::size_t i, std::vector<Exponents>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur[i] = k;
    monomials_of_degree(n, d - k, cur, i + 1, out);
  }
}

}  // namespace

FieldMatrix::FieldMatrix(std::initializer_list<std::initializer_list<FieldElement>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

FieldMatrix FieldMatrix::diagonal(const std::vector<FieldElement>& d) {
  FieldMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  FieldMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  FieldMatrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  FieldMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FieldMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& m0) {
  FieldMatrix m = m0;
  auto piv = rref(m);
  std::vector<std::vector<FieldElement>> out;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> x(m.cols(), FieldElement(0));
    x[f] = FieldElement(1);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(r, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& m, const std::vector<FieldElement>& b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side has the wrong length");
  FieldMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), FieldElement(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return x;
}

UPoly<FieldElement> characteristic_polynomial(const FieldMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier
  std::vector<FieldElement> c(n + 1, FieldElement(0));
  c[n] = FieldElement(1);
  FieldMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    FieldMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    FieldMatrix t = a * m;
    FieldElement tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
    c[n - k] = -tr / FieldElement(static_cast<long>(k));
  }
  return UPoly<FieldElement>(std::move(c));
}

MatrixSystem MatrixSystem::companion(const std::vector<FieldElement>& u) {
  const std::size_t n = u.size();
  if (n == 0) throw DomainError("empty companion vector");
  if (u[0].is_zero()) throw DomainError("u1 must be nonzero");
  MatrixSystem s;
  s.kind = Kind::Companion;
  s.A = FieldMatrix(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) s.A(i + 1, i) = FieldElement(1);
  for (std::size_t i = 0; i < n; ++i) s.A(i, n - 1) = u[i];
  return s;
}

MatrixSystem MatrixSystem::general(FieldMatrix a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("matrix must be square and nonempty");
  if (!inverse(a)) throw DomainError("matrix must be invertible");
  MatrixSystem s;
  s.A = std::move(a);
  return s;
}

Diagonalization diagonalize(const MatrixSystem& sys, const FieldCtxPtr& field) {
  const std::size_t n = sys.nvars();
  auto chi = characteristic_polynomial(sys.A);
  std::vector<std::pair<FieldElement, unsigned>> roots;
  for (const auto& [f, mult] : factor_univariate(chi, field)) {
    if (f.degree() != 1) throw FieldDoesNotSplit("characteristic polynomial does not split; supply an extension field");
    roots.emplace_back(-f.coeff(0) / f.lc(), mult);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Diagonalization d;
  d.X = FieldMatrix(n, n);
  std::size_t col = 0;
  for (const auto& [r, mult] : roots) {
    if (r.is_zero()) throw DomainError("matrix has a zero eigenvalue");
    auto basis = nullspace(sys.A - FieldMatrix::diagonal(std::vector<FieldElement>(n, r)));
    if (basis.size() != mult) throw NotDiagonalizable("eigenspace is smaller than the multiplicity");
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < n; ++i) d.X(i, col) = v[i];
      d.eigenvalues.push_back(r);
      ++col;
    }
  }
  d.X_inv = *inverse(d.X);
  if (d.X_inv * sys.A * d.X != FieldMatrix::diagonal(d.eigenvalues))
    throw std::logic_error("diagonalization failed verification");
  return d;
}

MultiPoly linear_substitute(const MultiPoly& p, const FieldMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    MultiPoly img(n);
    for (std::size_t i = 0; i < n; ++i) img += MultiPoly::variable(n, i) * m(i, j);
    images.push_back(img);
  }
  return substitute(p.with_nvars(n), images).with_nvars(n);
}

RatFunc linear_substitute(const RatFunc& f, const FieldMatrix& m) {
  return RatFunc::normalize(linear_substitute(f.num(), m), linear_substitute(f.den(), m));
}

SummabilityOutcome transport_solve(const MatrixSystem& sys, const RatFunc& f, const FieldElement& c,
                                   const FieldCtxPtr& field, const Options& opts) {
  Diagonalization d = diagonalize(sys, field);
  const RatFunc ft = linear_substitute(f, d.X_inv);
  SummabilityOutcome r = is_summable(ft, c, SigmaSpec(d.eigenvalues), opts);
  if (auto* s = std::get_if<Summable>(&r)) {
    RatFunc g = linear_substitute(s->g, d.X);
    if (RatFunc(c) * phi_apply(g, sys) - g != f.with_nvars(sys.nvars()))
      throw std::logic_error("transported witness failed verification");
    return Summable{g};
  }
  return r;
}

std::optional<MultiPoly> solve_polynomial_graded(const MatrixSystem& sys, const MultiPoly& f0, const FieldElement& c) {
  const std::size_t n = sys.nvars();
  const MultiPoly f = f0.with_nvars(n);
  std::map<unsigned, MultiPoly> parts;
  for (const auto& [e, k] : f.terms()) {
    unsigned d = 0;
    for (auto x : e) d += x;
    auto it = parts.try_emplace(d, MultiPoly(n)).first;
    it->second.add_term(e, k);
  }
  MultiPoly g(n);
  for (const auto& [deg, part] : parts) {
    std::vector<Exponents> basis;
    Exponents cur(n, 0);
    monomials_of_degree(n, deg, cur, 0, basis);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    FieldMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      MultiPoly mono = MultiPoly::monomial(basis[j], FieldElement(1));
      MultiPoly img = linear_substitute(mono, sys.A) * c - mono;
      for (const auto& [e, k] : img.terms()) m(index.at(e), j) = k;
    }
    std::vector<FieldElement> rhs(basis.size(), FieldElement(0));
    for (const auto& [e, k] : part.terms()) rhs[index.at(e)] = k;
    auto x = solve_linear(m, rhs);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < basis.size(); ++j) g.add_term(basis[j], (*x)[j]);
  }
  if (linear_substitute(g, sys.A) * c - g != f) throw std::logic_error("graded witness failed verification");
  return g;
}

}  // namespace dfsum
