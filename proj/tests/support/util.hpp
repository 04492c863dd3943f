#pragma once

#include "leinartas/parser.hpp"
#include "leinartas/polynomial.hpp"
#include "oracles.hpp"

#include <random>
#include <string_view>
#include <vector>

namespace leinartas::testing {

inline Polynomial P(const ContextPtr &ctx, std::string_view text) {
  return parse_polynomial(text, ctx);
}

inline std::vector<Polynomial> Ps(const ContextPtr &ctx,
                                  std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts)
    out.push_back(parse_polynomial(t, ctx));
  return out;
}

inline RationalExpression R(const ContextPtr &ctx, std::string_view text) {
  return parse_rational(text, ctx);
}

inline std::vector<Rational> random_point(std::size_t d, std::mt19937 &rng) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < d; ++i)
    pt.push_back(random_rational(rng));
  return pt;
}

} // namespace leinartas::testing
