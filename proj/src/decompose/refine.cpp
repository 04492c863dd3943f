#include "leinartas/decompose.hpp"

#include "leinartas/errors.hpp"
#include "leinartas/groebner.hpp"

#include <algorithm>
#include <map>

namespace leinartas {

namespace {

struct Work {
  Rational unit = 1;
  std::vector<FactorPower> items;

  // Appends f^e, absorbing its scalar content into `unit`.
  void push(const Polynomial &f, std::uint32_t e) {
    if (e == 0)
      return;
    if (f.is_constant()) {
      Rational c = f.constant_term();
      for (std::uint32_t k = 0; k < e; ++k)
        unit *= c;
      return;
    }
    Rational lc = f.leading_coefficient();
    for (std::uint32_t k = 0; k < e; ++k)
      unit *= lc;
    items.push_back({f.monic(), e});
  }
};

// f = x^mu * rest; returns mu, or nullopt when no variable divides f.
std::optional<Monomial> monomial_content(const Polynomial &f) {
  Monomial mu = f.terms().front().monomial;
  for (const auto &t : f.terms())
    mu = gcd(mu, t.monomial);
  if (mu.is_one())
    return std::nullopt;
  return mu;
}

// gcd of the coefficients of f viewed as a polynomial in variable j.
Polynomial content_in(const Polynomial &f, std::size_t j) {
  std::map<std::uint32_t, std::vector<Term>> coeffs;
  for (const auto &t : f.terms()) {
    auto e = t.monomial.exponents();
    auto k = e[j];
    e[j] = 0;
    coeffs[k].push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  std::optional<Polynomial> g;
  for (auto &[k, terms] : coeffs) {
    Polynomial c = Polynomial::canonicalize(f.context(), std::move(terms));
    g = g ? gcd(*g, c) : c.monic();
    if (g->is_constant())
      break;
  }
  return *g;
}

// One refinement step on a single factor: monomial content, content in one
// variable, or a gcd with a partial derivative. Returns the pieces when a
// nontrivial split was found.
std::optional<std::pair<Polynomial, Polynomial>> split_one(const Polynomial &f) {
  const auto &ctx = f.context();
  if (auto mu = monomial_content(f)) {
    if (f.size() == 1) {
      if (f.total_degree() == 1)
        return std::nullopt;
      // A monic monomial: peel off one variable.
      std::size_t j = 0;
      while ((*mu)[j] == 0)
        ++j;
      Polynomial x = Polynomial::variable(ctx, j);
      return std::pair{x, exact_divide(f, x)};
    }
    Polynomial m = Polynomial::monomial(ctx, *mu);
    return std::pair{m, exact_divide(f, m)};
  }
  for (std::size_t j = 0; j < f.num_vars(); ++j) {
    if (!f.involves(j))
      continue;
    Polynomial c = content_in(f, j);
    if (!c.is_constant())
      return std::pair{c, exact_divide(f, c)};
  }
  for (std::size_t j = 0; j < f.num_vars(); ++j) {
    Polynomial df = f.derivative(j);
    if (df.is_zero())
      continue;
    Polynomial g = gcd(f, df);
    if (!g.is_constant())
      return std::pair{g, exact_divide(f, g)};
  }
  return std::nullopt;
}

} // namespace

Polynomial FactoredDenominator::expand(const ContextPtr &ctx) const {
  Polynomial out = Polynomial::constant(ctx, unit);
  for (const auto &f : factors)
    out = out * f.factor.pow(f.exponent);
  return out;
}

FactoredDenominator coprime_refine(const std::vector<FactorPower> &candidates) {
  Work w;
  for (const auto &c : candidates) {
    if (c.factor.is_zero())
      throw UsageError("zero polynomial in denominator factor list");
    if (!same_context(c.factor.context(), candidates[0].factor.context()))
      throw UsageError("denominator factors belong to different variable contexts");
    w.push(c.factor, c.exponent);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Pairwise coprimality first: it also merges repeated factors.
    for (std::size_t a = 0; a < w.items.size() && !changed; ++a)
      for (std::size_t b = a + 1; b < w.items.size() && !changed; ++b) {
        Polynomial g = gcd(w.items[a].factor, w.items[b].factor);
        if (g.is_constant())
          continue;
        auto fa = w.items[a];
        auto fb = w.items[b];
        w.items.erase(w.items.begin() + static_cast<std::ptrdiff_t>(b));
        w.items.erase(w.items.begin() + static_cast<std::ptrdiff_t>(a));
        w.push(exact_divide(fa.factor, g), fa.exponent);
        w.push(exact_divide(fb.factor, g), fb.exponent);
        w.push(g, fa.exponent + fb.exponent);
        changed = true;
      }
    for (std::size_t a = 0; a < w.items.size() && !changed; ++a) {
      if (auto parts = split_one(w.items[a].factor)) {
        auto e = w.items[a].exponent;
        w.items.erase(w.items.begin() + static_cast<std::ptrdiff_t>(a));
        w.push(parts->first, e);
        w.push(parts->second, e);
        changed = true;
      }
    }
  }

  std::sort(w.items.begin(), w.items.end(), [](const FactorPower &x, const FactorPower &y) {
    return canonical_compare(x.factor, y.factor) < 0;
  });
  return FactoredDenominator{w.unit, std::move(w.items)};
}

} // namespace leinartas
