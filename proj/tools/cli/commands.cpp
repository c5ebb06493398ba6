#include "cli/commands.hpp"

#include <functional>
#include <map>
#include <ostream>

#include <json.hpp>

#include "dfsum/constant_field.hpp"
#include "dfsum/errors.hpp"
#include "dfsum/exponent_lattice.hpp"
#include "dfsum/format.hpp"
#include "dfsum/orbital.hpp"
#include "dfsum/solution_set.hpp"
#include "dfsum/spread.hpp"
#include "dfsum/summability.hpp"

namespace dfsum::cli {
namespace {

using json = nlohmann::json;

struct Result {
  int code = Ok;
  json data;
  std::vector<std::string> lines;
};

class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

const ProblemSpec& need_problem(const Invocation& inv) {
  if (!inv.problem) throw DomainError("command '" + inv.command + "' needs a problem (--problem FILE)");
  return *inv.problem;
}

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::vector<long> as_longs(const IntVector& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// c sigma(g) - g computed by substituting x_i -> lambda_i x_i
RatFunc delta_by_substitution(const RatFunc& g, const FieldElement& c, const std::vector<MultiPoly>& images) {
  const RatFunc sg = RatFunc::normalize(substitute(g.num(), images), substitute(g.den(), images));
  return RatFunc(c) * sg - g;
}

std::vector<MultiPoly> scaling_images(const std::vector<FieldElement>& lambda) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) out.push_back(MultiPoly::variable(lambda.size(), i) * lambda[i]);
  return out;
}

std::vector<MultiPoly> linear_images(const FieldMatrix& a) {
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    MultiPoly img(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) img += MultiPoly::variable(a.rows(), i) * a(i, j);
    out.push_back(img);
  }
  return out;
}

// the printed form must parse back to the same function
std::string checked_string(const RatFunc& g, const ProblemSpec& p) {
  std::string s = to_string(g, p.vars);
  if (p.parser().parse(s) != g.with_nvars(p.vars.size())) throw VerificationFailure("printed witness does not parse back");
  return s;
}

void verify_witness(const RatFunc& g, const RatFunc& f, const FieldElement& c, const std::vector<MultiPoly>& images) {
  if (delta_by_substitution(g, c, images) != f) throw VerificationFailure("witness failed the substitution check");
}

FieldElement c_value(const ProblemSpec& p) {
  if (!p.has("c")) return FieldElement(1);
  RatFunc c = p.expression("c");
  if (!c.is_constant() || c.is_zero()) throw DomainError("c must be a nonzero constant");
  return c.constant_value();
}

std::string obstruction_text(const Obstruction& o, const ProblemSpec& p) {
  switch (o.kind) {
    case Obstruction::Kind::Laurent:
      return "the coefficient of " + p.vars[o.variable] + "^" + std::to_string(o.laurent_index) +
             " leaves the non-summable remainder " + to_string(o.remainder, p.vars);
    case Obstruction::Kind::Orbit:
      return "nonzero remainder " + to_string(o.remainder, p.vars) + " over (" + to_string(o.representative, p.vars) +
             ")^" + std::to_string(o.multiplicity);
    case Obstruction::Kind::Constant:
      break;
  }
  return "constant term " + to_string(o.remainder, p.vars) + " cannot be reached with c = 1";
}

Result cmd_lattice(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  ExponentLattice lat = exponent_lattice(p.sigma().multipliers(), p.options);
  Result r;
  json rows = json::array();
  std::string s;
  for (const auto& row : lat.basis.row_list()) {
    rows.push_back(as_longs(row));
    s += (s.empty() ? "" : " + ") + vec_str(row) + "Z";
  }
  r.data = {{"basis", rows}, {"rank", lat.rank()}, {"exact", lat.exact}};
  r.lines.push_back("U = " + (s.empty() ? std::string("{0}") : s));
  if (!lat.exact) {
    r.lines.push_back("search bound reached; relations outside the box may be missing");
    r.code = UnknownExit;
  }
  return r;
}

Result cmd_constants(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  ConstantFieldDescription d = constant_generators(p.sigma().multipliers(), p.options);
  Result r;
  json gens = json::array();
  std::string s;
  for (const auto& g : d.generators) {
    const std::string m = monomial_string(as_longs(g), p.vars);
    if (!is_constant(monomial_function(g), p.sigma().multipliers())) throw VerificationFailure("generator is not constant");
    gens.push_back(m);
    s += (s.empty() ? "" : ", ") + m;
  }
  r.data = {{"generators", gens}, {"exact", d.exact}};
  r.lines.push_back(s.empty() ? "only the coefficient field is constant" : "constants generated by " + s);
  if (!d.exact) r.code = UnknownExit;
  return r;
}

Result cmd_spread(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  MultiPoly a, b;
  const ExpressionParser parser = p.parser();
  if (inv.args.size() == 2) {
    a = parser.parse_polynomial(inv.args[0]);
    b = parser.parse_polynomial(inv.args[1]);
  } else if (inv.args.empty()) {
    auto poly = [&](const char* k) {
      RatFunc f = p.expression(k);
      if (!f.is_polynomial()) throw DomainError(std::string(k) + " must be a polynomial");
      return f.num() * f.den().leading_coefficient().inverse();
    };
    a = poly("p");
    b = poly("q");
  } else {
    throw DomainError("spread takes two polynomials or none");
  }
  SpreadResult s = spread(a, b, p.sigma(), p.options);
  Result r;
  r.data = {{"spread", s.set.to_string()}, {"complete", s.complete}};
  if (!s.set.is_empty()) {
    r.data["offset"] = s.set.offset().get_str();
    r.data["modulus"] = s.set.modulus().get_str();
  }
  r.lines.push_back("Spr(p, q) = " + s.set.to_string());
  if (s.witness_unit) {
    const long k = s.set.offset().get_si();
    if (sigma_apply(a, p.sigma(), k) != b * *s.witness_unit) throw VerificationFailure("spread witness");
    r.data["unit"] = to_string(*s.witness_unit);
    r.lines.push_back("sigma^" + std::to_string(k) + "(p) = " + to_string(*s.witness_unit) + " * q");
  }
  if (!s.complete) r.code = UnknownExit;
  return r;
}

Result cmd_decompose(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  const RatFunc f = p.expression("f");
  OrbitalDecomposition d = orbital_decompose(f, p.sigma(), p.options);
  if (recompose(d) != f) throw VerificationFailure("decomposition does not recompose");
  Result r;
  const std::string& xv = p.vars.back();
  json laurent = json::object(), comps = json::array();
  for (const auto& [i, c] : d.laurent) {
    laurent[std::to_string(i)] = to_string(c, p.vars);
    r.lines.push_back(xv + "^" + std::to_string(i) + ": " + to_string(c, p.vars));
  }
  for (const auto& c : d.components) {
    json terms = json::object();
    r.lines.push_back("orbit of (" + to_string(c.representative, p.vars) + ")^" + std::to_string(c.multiplicity) +
                      (c.period ? ", period " + std::to_string(c.period) : std::string()));
    for (const auto& [l, a] : c.terms) {
      terms[std::to_string(l)] = to_string(a, p.vars);
      r.lines.push_back("  shift " + std::to_string(l) + ": " + to_string(a, p.vars));
    }
    comps.push_back({{"representative", to_string(c.representative, p.vars)},
                     {"multiplicity", c.multiplicity},
                     {"period", c.period},
                     {"terms", terms}});
  }
  r.data = {{"laurent", laurent}, {"components", comps}, {"complete", d.complete}};
  if (!d.complete) r.code = UnknownExit;
  return r;
}

Result outcome_result(const SummabilityOutcome& o, const RatFunc& f, const FieldElement& c,
                      const std::vector<MultiPoly>& images, const ProblemSpec& p) {
  Result r;
  if (const auto* s = std::get_if<Summable>(&o)) {
    verify_witness(s->g, f, c, images);
    const std::string g = checked_string(s->g, p);
    r.data = {{"status", "summable"}, {"g", g}, {"verified", true}};
    r.lines = {"summable", "g = " + g};
  } else if (const auto* n = std::get_if<NotSummable>(&o)) {
    r.code = NotSummableExit;
    r.data = {{"status", "not summable"}, {"reason", obstruction_text(n->obstruction, p)}};
    r.lines = {"not summable: " + obstruction_text(n->obstruction, p)};
  } else {
    r.code = UnknownExit;
    const std::string why = std::get<Unknown>(o).reason;
    r.data = {{"status", "unknown"}, {"reason", why}};
    r.lines = {"unknown: " + why};
  }
  return r;
}

Result cmd_summable(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  const RatFunc f = p.expression("f");
  const FieldElement c = c_value(p);
  return outcome_result(is_summable(f, c, p.sigma(), p.options), f, c, scaling_images(*p.lambda), p);
}

Result cmd_solve_all(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  const RatFunc f = p.expression("f");
  const FieldElement c = c_value(p);
  SolveAllResult res = solve_all(f, c, p.sigma(), p.options);
  if (const auto* n = std::get_if<NotSummable>(&res)) return outcome_result(*n, f, c, {}, p);
  if (const auto* u = std::get_if<Unknown>(&res)) return outcome_result(*u, f, c, {}, p);
  const SolutionSet& s = std::get<SolutionSet>(res);
  const auto images = scaling_images(*p.lambda);
  verify_witness(s.particular, f, c, images);
  Result r;
  const std::string g = checked_string(s.particular, p);
  json gens = json::array();
  std::string cs;
  for (const auto& e : s.constants.generators) {
    gens.push_back(monomial_string(as_longs(e), p.vars));
    cs += (cs.empty() ? "" : ", ") + gens.back().get<std::string>();
  }
  r.data = {{"status", "summable"}, {"particular", g}, {"constants", gens}};
  r.lines.push_back("particular solution g = " + g);
  if (s.homogeneous) {
    verify_witness(*s.homogeneous, RatFunc(0).with_nvars(p.vars.size()), c, images);
    const std::string h = checked_string(*s.homogeneous, p);
    r.data["homogeneous"] = h;
    r.lines.push_back("homogeneous solution h = " + h);
    r.lines.push_back(cs.empty() ? std::string("all solutions: F*h + g, F a constant of the base field")
                                 : "all solutions: F*h + g, F a rational function of " + cs);
  } else {
    r.data["homogeneous"] = nullptr;
    r.lines.push_back("the solution is unique");
  }
  if (!s.constants.exact) r.code = UnknownExit;
  return r;
}

Result cmd_companion_solve(const Invocation& inv) {
  const ProblemSpec& p = need_problem(inv);
  const MatrixSystem sys = p.system();
  const RatFunc f = p.expression("f");
  const FieldElement c = c_value(p);
  const auto images = linear_images(sys.A);
  Result r;
  std::string method = "diagonal transport";
  SummabilityOutcome o;
  try {
    o = transport_solve(sys, f, c, p.field, p.options);
  } catch (const CapabilityError& e) {
    // the eigenvalues need a larger field: solve polynomial inputs directly
    if (!f.is_polynomial()) throw;
    method = "graded polynomial solve";
    std::optional<MultiPoly> g = solve_polynomial_graded(sys, f.num() * f.den().leading_coefficient().inverse(), c);
    if (g)
      o = Summable{RatFunc(*g)};
    else
      o = Unknown{std::string(e.what()) + "; no polynomial solution exists"};
  }
  r = outcome_result(o, f, c, images, p);
  r.data["method"] = method;
  if (r.code == Ok) r.lines.insert(r.lines.begin() + 1, "method: " + method);
  return r;
}

std::vector<Integer> tribonacci(std::size_t n) {
  std::vector<Integer> t{0, 1, 1};
  while (t.size() <= n) t.push_back(t[t.size() - 1] + t[t.size() - 2] + t[t.size() - 3]);
  return t;
}

Result cmd_demo(const Invocation& inv) {
  if (inv.args.empty() || inv.args[0] != "tribonacci") throw DomainError("available demos: tribonacci");
  long m = 20;
  if (inv.args.size() > 1) {
    try {
      m = std::stol(inv.args[1]);
    } catch (const std::exception&) {
      throw ParseError("expected a number of terms", 0);
    }
  }
  if (m < 1 || m > 100000) throw DomainError("number of terms must be between 1 and 100000");
  const MatrixSystem sys = MatrixSystem::companion({FieldElement(1), FieldElement(1), FieldElement(1)});
  const std::vector<std::string> names{"a1", "a2", "a3"};
  const MultiPoly a1 = MultiPoly::variable(3, 0);
  std::optional<MultiPoly> g = solve_polynomial_graded(sys, a1, FieldElement(1));
  if (!g) throw VerificationFailure("no polynomial solution for the tribonacci sum");
  if (delta_by_substitution(RatFunc(*g), FieldElement(1), linear_images(sys.A)) != RatFunc(a1))
    throw VerificationFailure("tribonacci witness");
  // sum_{n=1}^m T_n = g(T_{m+1}, T_{m+2}, T_{m+3}) - g(T_1, T_2, T_3)
  const auto T = tribonacci(static_cast<std::size_t>(m) + 3);
  auto g_at = [&](std::size_t n) {
    return evaluate(*g, {FieldElement(T[n]), FieldElement(T[n + 1]), FieldElement(T[n + 2])});
  };
  Integer sum = 0;
  bool ok = true;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(m); ++k) {
    sum += T[k];
    ok = ok && FieldElement(sum) == g_at(k + 1) - g_at(1) && 2 * sum == T[k] + T[k + 2] - 1;
  }
  if (!ok) throw VerificationFailure("tribonacci closed form");
  Result r;
  const std::string gs = to_string(*g, names);
  r.data = {{"g", gs}, {"m", m}, {"sum", sum.get_str()}, {"verified", true}};
  r.lines = {"phi(a1, a2, a3) = (a2, a3, a1 + a2 + a3), g = " + gs,
             "phi(g) - g = a1, so sum_{n=1}^m T_n = (T_m + T_{m+2} - 1)/2",
             "sum_{n=1}^" + std::to_string(m) + " T_n = " + sum.get_str(),
             "verified for m = 1.." + std::to_string(m)};
  return r;
}

const std::map<std::string, std::function<Result(const Invocation&)>>& table() {
  static const std::map<std::string, std::function<Result(const Invocation&)>> t{
      {"lattice", cmd_lattice},     {"constants", cmd_constants}, {"spread", cmd_spread},
      {"decompose", cmd_decompose}, {"summable", cmd_summable},   {"solve-all", cmd_solve_all},
      {"companion-solve", cmd_companion_solve},                   {"demo", cmd_demo},
  };
  return t;
}

int fail(const Invocation& inv, std::ostream& err, std::ostream& out, int code, const std::string& kind,
         const std::string& msg) {
  if (inv.machine)
    out << json{{"status", "error"}, {"kind", kind}, {"message", msg}}.dump(2) << "\n";
  else
    err << "error: " << msg << "\n";
  return code;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

int run_command(const Invocation& inv, std::ostream& out, std::ostream& err) {
  auto it = table().find(inv.command);
  if (it == table().end()) return fail(inv, err, out, ParseFailure, "usage", "unknown command '" + inv.command + "'");
  if (inv.problem && inv.command != "demo" && inv.command != "companion-solve" && !inv.problem->lambda)
    return fail(inv, err, out, ParseFailure, "input", "problem has no lambda");
  try {
    Result r = it->second(inv);
    if (inv.machine)
      out << r.data.dump(2) << "\n";
    else
      for (const auto& l : r.lines) out << l << "\n";
    return r.code;
  } catch (const ParseError& e) {
    return fail(inv, err, out, ParseFailure, "parse", e.what());
  } catch (const CapabilityError& e) {
    return fail(inv, err, out, Capability, "capability", e.what());
  } catch (const DomainError& e) {
    return fail(inv, err, out, ParseFailure, "input", e.what());
  } catch (const std::exception& e) {
    return fail(inv, err, out, Internal, "internal", e.what());
  }
}

}  // namespace dfsum::cli
