#pragma once

namespace dfsum {

struct Options {
  // Box bound |i_j| <= search_bound for multiplicative relations among
  // number-field multipliers.
  int search_bound = 10;
  // Kronecker factorization caps.
  unsigned degree_cap = 12;
  unsigned max_support_vars = 3;
};

}  // namespace dfsum
