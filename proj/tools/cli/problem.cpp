#include "cli/problem.hpp"

#include <algorithm>
#include <cctype>

#include "dfsum/errors.hpp"

namespace dfsum::cli {
namespace {

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (lead) *lead = a;
  return s.substr(a, b - a);
}

// pieces of s split at sep, each with its offset in s
std::vector<std::pair<std::string, std::size_t>> split(const std::string& s, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      std::size_t lead = 0;
      std::string piece = trim(s.substr(start, i - start), &lead);
      out.emplace_back(piece, start + lead);
      start = i + 1;
    }
  }
  return out;
}

template <class F>
auto at_offset(std::size_t base, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    std::string msg = e.what();
    const std::string tail = " at offset " + std::to_string(e.offset());
    if (msg.size() >= tail.size() && msg.compare(msg.size() - tail.size(), tail.size(), tail) == 0)
      msg.erase(msg.size() - tail.size());
    throw ParseError(msg, base + e.offset());
  }
}

long parse_count(const std::string& v, std::size_t off) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw ParseError("expected a nonnegative integer", off);
  if (v.size() > 9) throw ParseError("integer too large", off);
  return std::stol(v);
}

bool is_companion_shape(const FieldMatrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (a(i, j) != FieldElement(i == j + 1 ? 1 : 0)) return false;
  return true;
}

}  // namespace

FieldCtxPtr parse_field(const std::string& src0) {
  std::size_t lead = 0;
  const std::string src = trim(src0, &lead);
  if (src == "rational" || src == "Q" || src.empty()) return nullptr;
  // Q[t]/(m)
  if (src.size() < 6 || src.compare(0, 2, "Q[") != 0) throw ParseError("expected 'rational' or Q[t]/(m)", lead);
  const std::size_t close = src.find(']');
  if (close == std::string::npos) throw ParseError("expected ']'", lead + src.size());
  const std::string gen = trim(src.substr(2, close - 2));
  if (gen.empty() || !std::isalpha(static_cast<unsigned char>(gen[0])))
    throw ParseError("expected a generator name", lead + 2);
  std::size_t slash = close + 1;
  while (slash < src.size() && std::isspace(static_cast<unsigned char>(src[slash]))) ++slash;
  if (slash >= src.size() || src[slash] != '/') throw ParseError("expected '/'", lead + slash);
  const std::size_t mstart = slash + 1;
  MultiPoly m = at_offset(lead + mstart, [&] { return ExpressionParser({gen}).parse_polynomial(src.substr(mstart)); });
  std::vector<Rational> coeffs(m.degree(0) + 1, Rational(0));
  for (const auto& [e, c] : m.terms()) coeffs[e[0]] = c.rational();
  if (coeffs.size() < 2) throw ParseError("minimal polynomial must have positive degree", lead + mstart);
  try {
    return NumberFieldCtx::create(UPoly<Rational>(coeffs), gen);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lead + mstart);
  }
}

ProblemSpec parse_problem(const std::string& text) {
  ProblemSpec p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!trim(line).empty()) {
      const std::size_t colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'key: value'", pos);
      const std::string key = trim(line.substr(0, colon));
      std::size_t lead = 0;
      const std::string value = trim(line.substr(colon + 1), &lead);
      static const std::vector<std::string> known{"field", "vars", "lambda", "matrix", "c", "f", "p", "q", "bound", "degree_cap"};
      if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("unknown key '" + key + "'", pos);
      if (p.values_.count(key)) throw ParseError("duplicate key '" + key + "'", pos);
      p.values_[key] = {value, pos + colon + 1 + lead};
    }
    pos = end + 1;
  }

  auto get = [&](const std::string& k) { return p.values_.at(k); };
  if (p.has("field")) {
    auto [v, off] = get("field");
    p.field = at_offset(off, [&] { return parse_field(v); });
  }
  if (p.has("lambda") && p.has("matrix")) throw ParseError("give either lambda or matrix, not both", get("matrix").second);
  if (p.has("vars")) {
    auto [v, off] = get("vars");
    for (auto& [name, o] : split(v, ',')) {
      const bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                      std::all_of(name.begin(), name.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
      if (!ok) throw ParseError("bad variable name '" + name + "'", off + o);
      if (std::find(p.vars.begin(), p.vars.end(), name) != p.vars.end()) throw ParseError("repeated variable '" + name + "'", off + o);
      if (p.field && name == p.field->generator_name()) throw ParseError("variable clashes with the field generator", off + o);
      p.vars.push_back(name);
    }
  }
  const ExpressionParser constants({}, p.field);
  std::size_t n = 0;
  if (p.has("lambda")) {
    auto [v, off] = get("lambda");
    std::vector<FieldElement> lam;
    for (auto& [piece, o] : split(v, ',')) {
      FieldElement x = at_offset(off + o, [&] { return constants.parse_constant(piece); });
      if (x.is_zero()) throw ParseError("multipliers must be nonzero", off + o);
      lam.push_back(x);
    }
    n = lam.size();
    p.lambda = std::move(lam);
  }
  if (p.has("matrix")) {
    auto [v, off] = get("matrix");
    std::vector<std::vector<FieldElement>> rows;
    for (auto& [row, ro] : split(v, ';')) {
      rows.emplace_back();
      for (auto& [piece, o] : split(row, ','))
        rows.back().push_back(at_offset(off + ro + o, [&] { return constants.parse_constant(piece); }));
    }
    n = rows.size();
    FieldMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw ParseError("matrix must be square", off);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    p.matrix = std::move(a);
  }
  if (p.vars.empty()) {
    for (std::size_t i = 0; i < n; ++i) p.vars.push_back("a" + std::to_string(i + 1));
  } else if (n && p.vars.size() != n) {
    throw ParseError("number of variables does not match the multipliers", get("vars").second);
  }
  if (p.has("bound")) p.options.search_bound = static_cast<int>(parse_count(get("bound").first, get("bound").second));
  if (p.has("degree_cap"))
    p.options.degree_cap = static_cast<unsigned>(parse_count(get("degree_cap").first, get("degree_cap").second));
  // check every expression now so that errors surface before any command runs
  for (const char* k : {"c", "f", "p", "q"})
    if (p.has(k)) p.expression(k);
  return p;
}

RatFunc ProblemSpec::expression(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ParseError("problem has no '" + key + "'", 0);
  const auto& [v, off] = it->second;
  return at_offset(off, [&] { return parser().parse(v); });
}

SigmaSpec ProblemSpec::sigma() const {
  if (!lambda) throw DomainError("problem has no lambda");
  return SigmaSpec(*lambda);
}

MatrixSystem ProblemSpec::system() const {
  if (!matrix) throw DomainError("problem has no matrix");
  if (is_companion_shape(*matrix)) {
    std::vector<FieldElement> u;
    for (std::size_t i = 0; i < matrix->rows(); ++i) u.push_back((*matrix)(i, matrix->cols() - 1));
    if (!u[0].is_zero()) return MatrixSystem::companion(u);
  }
  return MatrixSystem::general(*matrix);
}

}  // namespace dfsum::cli
