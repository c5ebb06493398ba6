#pragma once

#include <string>
#include <vector>

#include "dfsum/ratfunc.hpp"

namespace dfsum::cli {

// Rational literals, the field generator, variables, + - * / ^ and
// parentheses. Exponents are integers, possibly negative.
class ExpressionParser {
 public:
  ExpressionParser(std::vector<std::string> vars, FieldCtxPtr field = nullptr);

  RatFunc parse(const std::string& src) const;
  MultiPoly parse_polynomial(const std::string& src) const;
  FieldElement parse_constant(const std::string& src) const;

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const FieldCtxPtr& field() const noexcept { return field_; }

 private:
  std::vector<std::string> vars_;
  FieldCtxPtr field_;
};

}  // namespace dfsum::cli
