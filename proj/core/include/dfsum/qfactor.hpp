#pragma once

#include <utility>
#include <vector>

#include "dfsum/upoly.hpp"

namespace dfsum {

using QPoly = UPoly<Rational>;

// f = unit * prod factors[i].first ^ factors[i].second, factors monic,
// irreducible over Q and pairwise distinct.
struct QFactorization {
  Rational unit;
  std::vector<std::pair<QPoly, unsigned>> factors;
};

QFactorization factor_rational_poly(const QPoly& f);

bool is_irreducible_rational(const QPoly& f);

}  // namespace dfsum
