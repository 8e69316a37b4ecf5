#include "sextic/expr.hpp"

#include <cctype>

namespace sextic {

ExprContext ExprContext::for_field(const FieldPtr& field) {
  ExprContext ctx;
  ctx.field = field;
  for (FieldPtr f = field; f && !f->is_rationals(); f = f->base())
    ctx.constants.emplace(f->generator_name(), field->lift(f->generator()));
  return ctx;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExprContext& ctx) : s_(text), ctx_(ctx) {}

  TriPoly parse() {
    TriPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TriPoly expr() {
    TriPoly v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  TriPoly term() {
    TriPoly v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        TriPoly d = unary();
        if (d.degree() > 0) fail("division by a non-constant");
        if (d.is_zero()) fail("division by zero");
        v = d.leading_coeff().inverse() * v;
      } else {
        return v;
      }
    }
  }

  TriPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  TriPoly power() {
    TriPoly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  TriPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TriPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigInt n(std::string(s_.substr(start, pos_ - start)));
      return TriPoly::constant(ctx_.field->from_rational(BigRational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (auto it = ctx_.variables.find(name); it != ctx_.variables.end())
        return TriPoly::variable(ctx_.field, it->second);
      if (auto it = ctx_.definitions.find(name); it != ctx_.definitions.end())
        return it->second.lifted(ctx_.field);
      if (auto it = ctx_.constants.find(name); it != ctx_.constants.end())
        return TriPoly::constant(ctx_.field->lift(it->second));
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

TriPoly parse_expr(std::string_view text, const ExprContext& ctx) {
  if (!ctx.field) throw std::invalid_argument("expression context without a field");
  TriPoly r = Parser(text, ctx).parse();
  return r.lifted(ctx.field);
}

Poly<FieldElement> parse_univariate(std::string_view text, const ExprContext& ctx,
                                    const std::string& var) {
  ExprContext c = ctx;
  c.variables = {{var, 0}};
  return to_uni(parse_expr(text, c), 0);
}

FieldElement parse_constant(std::string_view text, const ExprContext& ctx) {
  ExprContext c = ctx;
  c.variables.clear();
  TriPoly p = parse_expr(text, c);
  if (p.is_zero()) return ctx.field->zero();
  if (p.degree() > 0) throw ParseError("expected a constant: " + std::string(text));
  return p.leading_coeff();
}

}  // namespace sextic
