#include "cli/parser.hpp"

#include <algorithm>
#include <cctype>

#include "dfsum/errors.hpp"

namespace dfsum::cli {
namespace {

class Cursor {
 public:
  Cursor(const std::string& s, const std::vector<std::string>& vars, const FieldCtxPtr& field)
      : s_(s), vars_(vars), field_(field) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (i_ < s_.size()) fail(s_[i_] == ')' ? "unbalanced ')'" : "unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      skip();
      const std::size_t at = i_;
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        RatFunc d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!eat('^')) return base;
    skip();
    const std::size_t at = i_;
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer exponent");
    Integer e = digits();
    if (!e.fits_slong_p()) throw ParseError("exponent too large", at);
    const long k = neg ? -e.get_si() : e.get_si();
    if (k < 0 && base.is_zero()) throw ParseError("division by zero", at);
    return base.pow(k);
  }

  Integer digits() {
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return Integer(s_.substr(start, i_ - start));
  }

  RatFunc primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return RatFunc(FieldElement(digits())).with_nvars(vars_.size());
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(start, i_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end())
        return RatFunc(MultiPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin())));
      if (field_ && name == field_->generator_name())
        return RatFunc(FieldElement::generator(field_)).with_nvars(vars_.size());
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  const FieldCtxPtr& field_;
  std::size_t i_ = 0;
};

}  // namespace

ExpressionParser::ExpressionParser(std::vector<std::string> vars, FieldCtxPtr field)
    : vars_(std::move(vars)), field_(std::move(field)) {}

RatFunc ExpressionParser::parse(const std::string& src) const {
  return Cursor(src, vars_, field_).run().with_nvars(vars_.size());
}

MultiPoly ExpressionParser::parse_polynomial(const std::string& src) const {
  RatFunc r = parse(src);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial", 0);
  return r.num() * r.den().leading_coefficient().inverse();
}

FieldElement ExpressionParser::parse_constant(const std::string& src) const {
  RatFunc r = parse(src);
  if (!r.is_constant()) throw ParseError("expected a constant", 0);
  return r.constant_value();
}

}  // namespace dfsum::cli
