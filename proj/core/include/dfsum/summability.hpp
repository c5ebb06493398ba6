#pragma once

#include <string>
#include <variant>

#include "dfsum/orbital.hpp"

namespace dfsum {

// What blocked summability.
struct Obstruction {
  enum class Kind { Laurent, Orbit, Constant };
  Kind kind = Kind::Constant;
  std::size_t variable = 0;   // depth of the recursion (0-based variable index)
  long laurent_index = 0;     // for Laurent
  MultiPoly representative;   // for Orbit
  unsigned multiplicity = 0;  // for Orbit
  RatFunc remainder;          // offending coefficient or reduced numerator
  std::string describe() const;
};

struct Summable {
  RatFunc g;
};
struct NotSummable {
  Obstruction obstruction;
};
struct Unknown {
  std::string reason;
};
using SummabilityOutcome = std::variant<Summable, NotSummable, Unknown>;

inline bool is_summable_outcome(const SummabilityOutcome& o) { return std::holds_alternative<Summable>(o); }
inline const RatFunc& witness(const SummabilityOutcome& o) { return std::get<Summable>(o).g; }

// sum_l terms[l] / sigma^l(d)^j = c sigma(g) - g + a / d^j
struct ShiftReduction {
  RatFunc g;
  RatFunc remainder;  // the numerator a
};
ShiftReduction shift_reduce(const OrbitComponent& comp, const FieldElement& c, const SigmaSpec& spec);

// a / d^j with d irreducible, not x_n, deg_{x_n} a < deg_{x_n} d
SummabilityOutcome fraction_summable(const RatFunc& a, const MultiPoly& d, unsigned j, const FieldElement& c,
                                     const SigmaSpec& spec, const Options& opts = {});
// p * x_n^i with p free of x_n
SummabilityOutcome laurent_summable(const RatFunc& p, long i, const FieldElement& c, const SigmaSpec& spec,
                                    const Options& opts = {});
// Decide whether f = c sigma(g) - g has a rational solution g.
SummabilityOutcome is_summable(const RatFunc& f, const FieldElement& c, const SigmaSpec& spec,
                               const Options& opts = {});

}  // namespace dfsum
