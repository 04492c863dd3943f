#pragma once

#include "leinartas/decompose.hpp"
#include "leinartas/errors.hpp"
#include "leinartas/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leinartas {

/// Syntax or evaluation error at a 1-based column of the source text.
class ParseError : public UsageError {
public:
  ParseError(std::size_t column, const std::string &what);
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

/// Division by an expression that evaluates to zero.
class ZeroDenominatorError : public DomainError {
public:
  ZeroDenominatorError(std::size_t column, const std::string &what);
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

struct ParsedInput {
  ContextPtr variables;
  RationalExpression expression;
  std::optional<std::vector<FactorPower>> supplied_factors;
};

/// Largest exponent accepted after `^`.
inline constexpr std::uint64_t max_exponent = 10000;

/// Grammar (no implicit multiplication):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER | IDENTIFIER | '(' expr ')'
/// The value is computed exactly in Q(X) as one numerator/denominator pair.
RationalExpression parse_rational(std::string_view source, const ContextPtr &ctx);

/// Parses a polynomial; a nonconstant denominator is an error.
Polynomial parse_polynomial(std::string_view source, const ContextPtr &ctx);

/// Parses "POLY:EXP" as used by --factor.
FactorPower parse_factor_spec(std::string_view spec, const ContextPtr &ctx);

/// Splits "x,y,z" and validates identifiers.
ContextPtr parse_variable_list(std::string_view list);

ParsedInput parse_expression(std::string_view source, const std::vector<std::string> &variables);

} // namespace leinartas
