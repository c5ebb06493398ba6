#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cli/parser.hpp"
#include "dfsum/companion.hpp"
#include "dfsum/options.hpp"
#include "dfsum/sigma.hpp"

namespace dfsum::cli {

// key: value lines; '#' starts a comment.
//   field: rational | Q[t]/(t^2 - 2)
//   vars: a1, a2, a3
//   lambda: -1, 1/2, -4          (or)   matrix: 0,0,1; 1,0,1; 0,1,1
//   c, f, p, q: expressions
//   bound, degree_cap: integers
struct ProblemSpec {
  FieldCtxPtr field;
  std::vector<std::string> vars;
  std::optional<std::vector<FieldElement>> lambda;
  std::optional<FieldMatrix> matrix;
  Options options;

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  // parse the expression stored under key; errors report file offsets
  RatFunc expression(const std::string& key) const;
  ExpressionParser parser() const { return ExpressionParser(vars, field); }
  SigmaSpec sigma() const;
  MatrixSystem system() const;

  friend ProblemSpec parse_problem(const std::string& text);

 private:
  std::map<std::string, std::pair<std::string, std::size_t>> values_;
};

ProblemSpec parse_problem(const std::string& text);

// "Q[t]/(t^2 - 2)" or "rational"
FieldCtxPtr parse_field(const std::string& src);

}  // namespace dfsum::cli
