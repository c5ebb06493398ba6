#include "dfsum/integer_lattice.hpp"

#include "dfsum/errors.hpp"

namespace dfsum {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> r;
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& x) const {
  if (x.size() != cols_) throw DomainError("dimension mismatch");
  IntVector r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

namespace {

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row a -= q * row b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

void row_negate(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfWithTransform hnf_with_transform(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix h = m;
  IntMatrix u(r, r);
  for (std::size_t i = 0; i < r; ++i) u(i, i) = 1;
  auto swap_both = [&](std::size_t a, std::size_t b) {
    row_swap(h, a, b);
    row_swap(u, a, b);
  };
  auto axpy_both = [&](std::size_t a, std::size_t b, const Integer& q) {
    row_axpy(h, a, b, q);
    row_axpy(u, a, b, q);
  };

  std::size_t prow = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t col = 0; col < c && prow < r; ++col) {
    for (;;) {
      // smallest nonzero entry at or below prow becomes the pivot
      std::size_t best = r;
      for (std::size_t i = prow; i < r; ++i)
        if (h(i, col) != 0 && (best == r || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == r) break;
      swap_both(prow, best);
      bool clean = true;
      for (std::size_t i = prow + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = floor_div(h(i, col), h(prow, col));
        axpy_both(i, prow, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(prow, col) == 0) continue;
    if (h(prow, col) < 0) {
      row_negate(h, prow);
      row_negate(u, prow);
    }
    for (std::size_t i = 0; i < prow; ++i) axpy_both(i, prow, floor_div(h(i, col), h(prow, col)));
    pivcol.push_back(col);
    ++prow;
  }
  return {std::move(h), std::move(u), prow};
}

IntMatrix hnf(const IntMatrix& m) {
  auto t = hnf_with_transform(m);
  IntMatrix out(t.rank, m.cols());
  for (std::size_t i = 0; i < t.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = t.h(i, j);
  return out;
}

AffineLattice solve_integer(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) throw DomainError("right-hand side has wrong length");
  const std::size_t n = m.cols();
  // U * M^T = [H; 0]  =>  M * U^T = [H^T | 0]; x = U^T y
  auto t = hnf_with_transform(m.transpose());
  AffineLattice out;

  std::vector<IntVector> kernel;
  for (std::size_t i = t.rank; i < n; ++i) kernel.push_back(t.u.row(i));
  if (!kernel.empty()) out.kernel_basis = hnf(IntMatrix::from_rows(kernel, n)).row_list();

  // H is t.rank x m.rows() echelon; solve sum_i y_i H(i, :) = v
  IntVector y(n, 0);
  IntVector residual = v;
  bool ok = true;
  std::size_t col = 0;
  for (std::size_t i = 0; i < t.rank && ok; ++i) {
    while (t.h(i, col) == 0) ++col;
    if (!mpz_divisible_p(residual[col].get_mpz_t(), t.h(i, col).get_mpz_t())) {
      ok = false;
      break;
    }
    y[i] = residual[col] / t.h(i, col);
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= y[i] * t.h(i, j);
  }
  for (const auto& r : residual)
    if (r != 0) ok = false;
  if (!ok) return out;

  IntVector x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < t.rank; ++k) x[i] += t.u(k, i) * y[k];

  for (const auto& kv : out.kernel_basis) {
    std::size_t pc = 0;
    while (kv[pc] == 0) ++pc;
    Integer q = floor_div(x[pc], kv[pc]);
    for (std::size_t j = 0; j < n; ++j) x[j] -= q * kv[j];
  }
  out.particular = std::move(x);
  return out;
}

Progression Progression::single(const Integer& k) {
  Progression p;
  p.kind_ = Kind::Single;
  p.k0_ = k;
  p.l0_ = 0;
  return p;
}

Progression Progression::arith(const Integer& k, const Integer& l) {
  if (l == 0) return single(k);
  Progression p;
  p.kind_ = Kind::Arith;
  p.l0_ = abs(l);
  mpz_fdiv_r(p.k0_.get_mpz_t(), k.get_mpz_t(), p.l0_.get_mpz_t());
  return p;
}

bool Progression::contains(const Integer& k) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Single:
      return k == k0_;
    case Kind::Arith: {
      Integer d = k - k0_;
      return mpz_divisible_p(d.get_mpz_t(), l0_.get_mpz_t()) != 0;
    }
  }
  return false;
}

std::string Progression::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "{}";
    case Kind::Single:
      return "{" + k0_.get_str() + "}";
    case Kind::Arith:
      if (l0_ == 1) return "Z";
      if (k0_ == 0) return l0_.get_str() + "Z";
      return k0_.get_str() + "+" + l0_.get_str() + "Z";
  }
  return "";
}

Progression progression_intersect(const Progression& a, const Progression& b) {
  if (a.is_empty() || b.is_empty()) return Progression::empty();
  if (a.kind() == Progression::Kind::Single) return b.contains(a.offset()) ? a : Progression::empty();
  if (b.kind() == Progression::Kind::Single) return a.contains(b.offset()) ? b : Progression::empty();
  const Integer &m = a.modulus(), &n = b.modulus();
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  Integer diff = b.offset() - a.offset();
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return Progression::empty();
  Integer l = m / g * n;
  // x = a0 + m * s * (diff / g)
  Integer x = a.offset() + m * s * (diff / g);
  return Progression::arith(x, l);
}

}  // namespace dfsum
