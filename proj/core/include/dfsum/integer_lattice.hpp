#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfsum/upoly.hpp"

namespace dfsum {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  IntVector operator*(const IntVector& x) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

// Row Hermite normal form: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot), zero rows removed.
IntMatrix hnf(const IntMatrix& m);

// Row HNF together with a unimodular U such that U * m = [H; 0].
struct HnfWithTransform {
  IntMatrix h;  // all rows, including trailing zero rows
  IntMatrix u;
  std::size_t rank = 0;
};
HnfWithTransform hnf_with_transform(const IntMatrix& m);

// All integer solutions of M x = v: particular + span(kernel_basis).
// The kernel basis is in HNF and the particular solution is reduced
// against it, so the output is canonical.
struct AffineLattice {
  std::optional<IntVector> particular;
  std::vector<IntVector> kernel_basis;
};
AffineLattice solve_integer(const IntMatrix& m, const IntVector& v);

// Empty, a single integer, or k0 + l0 Z with 0 <= k0 < l0.
class Progression {
 public:
  enum class Kind { Empty, Single, Arith };

  Progression() = default;
  static Progression empty() { return Progression(); }
  static Progression single(const Integer& k);
  static Progression arith(const Integer& k, const Integer& l);
  static Progression all() { return arith(0, 1); }

  Kind kind() const noexcept { return kind_; }
  bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  const Integer& offset() const noexcept { return k0_; }
  // 0 for singletons
  const Integer& modulus() const noexcept { return l0_; }
  bool contains(const Integer& k) const;
  std::string to_string() const;

  friend bool operator==(const Progression& a, const Progression& b) {
    return a.kind_ == b.kind_ && a.k0_ == b.k0_ && a.l0_ == b.l0_;
  }
  friend bool operator!=(const Progression& a, const Progression& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Empty;
  Integer k0_ = 0, l0_ = 0;
};

Progression progression_intersect(const Progression& a, const Progression& b);

}  // namespace dfsum
