#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "dfsum/summability.hpp"

namespace dfsum {

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, FieldElement(0)) {}
  FieldMatrix(std::initializer_list<std::initializer_list<FieldElement>> rows);
  static FieldMatrix identity(std::size_t n);
  static FieldMatrix diagonal(const std::vector<FieldElement>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

std::optional<FieldMatrix> inverse(const FieldMatrix& m);
// basis of { x : m x = 0 }
std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& m);
// some x with m x = b
std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& m, const std::vector<FieldElement>& b);
// det(x I - m), low to high
UPoly<FieldElement> characteristic_polynomial(const FieldMatrix& m);

// phi(x_j) = sum_i A(i, j) x_i
struct MatrixSystem {
  enum class Kind { Companion, General };
  FieldMatrix A;
  Kind kind = Kind::General;

  // ones below the diagonal, last column u
  static MatrixSystem companion(const std::vector<FieldElement>& u);
  static MatrixSystem general(FieldMatrix a);
  std::size_t nvars() const { return A.rows(); }
};

// X^{-1} A X = diag(eigenvalues)
struct Diagonalization {
  std::vector<FieldElement> eigenvalues;
  FieldMatrix X, X_inv;
};
Diagonalization diagonalize(const MatrixSystem& sys, const FieldCtxPtr& field = nullptr);

// x_j -> sum_i m(i, j) x_i
MultiPoly linear_substitute(const MultiPoly& p, const FieldMatrix& m);
RatFunc linear_substitute(const RatFunc& f, const FieldMatrix& m);
inline RatFunc phi_apply(const RatFunc& f, const MatrixSystem& sys) { return linear_substitute(f, sys.A); }

// c phi(g) - g = f through the diagonal field
SummabilityOutcome transport_solve(const MatrixSystem& sys, const RatFunc& f, const FieldElement& c,
                                   const FieldCtxPtr& field = nullptr, const Options& opts = {});
// polynomial g with c phi(g) - g = f, degree by degree
std::optional<MultiPoly> solve_polynomial_graded(const MatrixSystem& sys, const MultiPoly& f, const FieldElement& c);

}  // namespace dfsum
