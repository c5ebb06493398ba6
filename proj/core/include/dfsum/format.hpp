#pragma once

#include <string>
#include <vector>

#include "dfsum/ratfunc.hpp"

namespace dfsum {

// Output is accepted by the CLI expression parser.
std::string to_string(const FieldElement& x);
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names);
std::string to_string(const RatFunc& f, const std::vector<std::string>& names);
// x^e with possibly negative exponents, e.g. "a1*a2^2*a3" or "a1/a3^2"
std::string monomial_string(const std::vector<long>& e, const std::vector<std::string>& names);

// a1, a2, ... an
std::vector<std::string> default_names(std::size_t n);

inline std::string to_string(const MultiPoly& p) { return to_string(p, default_names(p.nvars())); }
inline std::string to_string(const RatFunc& f) { return to_string(f, default_names(f.nvars())); }

}  // namespace dfsum
