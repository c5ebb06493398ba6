#pragma once

#include <utility>
#include <vector>

#include "dfsum/options.hpp"
#include "dfsum/qfactor.hpp"
#include "dfsum/ratfunc.hpp"

namespace dfsum {

// Q = content * prod factors[i].first ^ factors[i].second where content is
// free of the chosen variable and every factor is monic (grlex),
// irreducible in F[x_1..x_n] and of positive degree in that variable.
struct Factorization {
  RatFunc content;
  std::vector<std::pair<MultiPoly, unsigned>> factors;

  RatFunc expand() const;
};

QFactorization factor_univariate_rational(const QPoly& p);

// Monic irreducible factors with multiplicities over Q or over the number
// field of the coefficients, or over `field` when given.
std::vector<std::pair<UPoly<FieldElement>, unsigned>> factor_univariate(const UPoly<FieldElement>& p,
                                                                        const FieldCtxPtr& field = nullptr);

Factorization factor_wrt_last_var(const MultiPoly& q, std::size_t var, const Options& opts = {});
inline Factorization factor_wrt_last_var(const MultiPoly& q, const Options& opts = {}) {
  return factor_wrt_last_var(q, q.nvars() ? q.nvars() - 1 : 0, opts);
}

// Squarefree decomposition with respect to var of a polynomial that is
// primitive in var: monic parts of positive degree with multiplicities.
std::vector<std::pair<MultiPoly, unsigned>> squarefree_in(const MultiPoly& p, std::size_t var);

}  // namespace dfsum
