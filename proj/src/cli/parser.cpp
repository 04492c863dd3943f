#include "leinartas/parser.hpp"

#include "leinartas/groebner.hpp"

#include <algorithm>
#include <cctype>

namespace leinartas {

ParseError::ParseError(std::size_t column, const std::string &what)
    : UsageError("column " + std::to_string(column) + ": " + what), column_(column) {}

ZeroDenominatorError::ZeroDenominatorError(std::size_t column, const std::string &what)
    : DomainError("column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Value {
  Polynomial num;
  Polynomial den;
};

// Moves a constant denominator into the numerator.
Value tidy(Value v) {
  if (v.den.is_constant() && !v.den.is_one()) {
    v.num = Rational(1 / v.den.constant_term()) * v.num;
    v.den = Polynomial::constant(v.den.context(), 1);
  }
  return v;
}

class Parser {
public:
  Parser(std::string_view src, const ContextPtr &ctx) : src_(src), ctx_(ctx) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ < src_.size())
      fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

private:
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(column(), what); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value constant(const Rational &c) const {
    return {Polynomial::constant(ctx_, c), Polynomial::constant(ctx_, 1)};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = add(v, term(), false);
      } else if (accept('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip_ws();
      std::size_t at = column();
      if (accept('*')) {
        Value r = unary();
        v = tidy({v.num * r.num, v.den * r.den});
      } else if (accept('/')) {
        Value r = unary();
        if (r.num.is_zero())
          throw ZeroDenominatorError(at, "division by zero");
        v = tidy({v.num * r.den, v.den * r.num});
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      return {-v.num, v.den};
    }
    if (accept('+'))
      return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^'))
      return base;
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a non-negative integer exponent after '^'");
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    Integer e(std::string(src_.substr(start, pos_ - start)));
    if (e > max_exponent)
      throw ParseError(start + 1, "exponent overflow (limit " + std::to_string(max_exponent) + ")");
    auto k = e.get_ui();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^')
      fail("chained '^' is ambiguous; use parentheses");
    return {base.num.pow(k), base.den.pow(k)};
  }

  Value primary() {
    skip_ws();
    if (pos_ >= src_.size())
      fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')'))
        fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      return constant(Rational(Integer(std::string(src_.substr(start, pos_ - start)))));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_]))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      auto idx = ctx_->index_of(name);
      if (!idx)
        throw ParseError(start + 1, "unknown identifier '" + name + "'");
      return {Polynomial::variable(ctx_, *idx), Polynomial::constant(ctx_, 1)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static Value add(const Value &a, const Value &b, bool subtract) {
    Polynomial rhs = subtract ? -b.num : b.num;
    if (a.den == b.den)
      return {a.num + rhs, a.den};
    return tidy({a.num * b.den + rhs * a.den, a.den * b.den});
  }

  std::string_view src_;
  const ContextPtr &ctx_;
  std::size_t pos_ = 0;
};

} // namespace

RationalExpression parse_rational(std::string_view source, const ContextPtr &ctx) {
  Value v = Parser(source, ctx).parse();
  return RationalExpression(std::move(v.num), std::move(v.den));
}

Polynomial parse_polynomial(std::string_view source, const ContextPtr &ctx) {
  auto f = parse_rational(source, ctx);
  if (f.denominator.is_constant())
    return Rational(1 / f.denominator.constant_term()) * f.numerator;
  auto qr = divide(f.numerator, {f.denominator});
  if (!qr.remainder.is_zero())
    throw ParseError(1, "expected a polynomial, got a proper rational expression");
  return qr.quotients[0];
}

FactorPower parse_factor_spec(std::string_view spec, const ContextPtr &ctx) {
  auto colon = spec.rfind(':');
  if (colon == std::string_view::npos)
    throw ParseError(1, "factor must be written POLY:EXP");
  auto exp_text = spec.substr(colon + 1);
  std::size_t first = 0;
  while (first < exp_text.size() && std::isspace(static_cast<unsigned char>(exp_text[first])))
    ++first;
  std::size_t last = exp_text.size();
  while (last > first && std::isspace(static_cast<unsigned char>(exp_text[last - 1])))
    --last;
  exp_text = exp_text.substr(first, last - first);
  if (exp_text.empty() || exp_text.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError(colon + 2, "factor exponent must be a positive integer");
  Integer e{std::string(exp_text)};
  if (e == 0)
    throw ParseError(colon + 2, "factor exponent must be a positive integer");
  if (e > max_exponent)
    throw ParseError(colon + 2, "exponent overflow (limit " + std::to_string(max_exponent) + ")");
  Polynomial f = parse_polynomial(spec.substr(0, colon), ctx);
  if (f.is_constant())
    throw ParseError(1, "denominator factor must be a nonconstant polynomial");
  return FactorPower{std::move(f), static_cast<std::uint32_t>(e.get_ui())};
}

ContextPtr parse_variable_list(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    auto piece = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    std::size_t a = 0, b = piece.size();
    while (a < b && std::isspace(static_cast<unsigned char>(piece[a])))
      ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(piece[b - 1])))
      --b;
    std::string name(piece.substr(a, b - a));
    if (name.empty() || !is_ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_ident_char))
      throw ParseError(start + 1, "invalid variable name '" + name + "'");
    names.push_back(std::move(name));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  try {
    return make_context(std::move(names));
  } catch (const UsageError &e) {
    throw ParseError(1, e.what());
  }
}

ParsedInput parse_expression(std::string_view source, const std::vector<std::string> &variables) {
  ContextPtr ctx;
  try {
    ctx = make_context(variables);
  } catch (const UsageError &e) {
    throw ParseError(1, e.what());
  }
  return ParsedInput{ctx, parse_rational(source, ctx), std::nullopt};
}

} // namespace leinartas
