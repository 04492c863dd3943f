#pragma once

// Merge kernels over term lists sorted strictly descending under some
// monomial order. Shared by Polynomial (degrevlex) and the Groebner engine
// (arbitrary orders).

#include "leinartas/polynomial.hpp"

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

namespace leinartas::detail {

/// a + scale * shift * b. Both inputs sorted descending under `cmp`; the
/// result is too, since monomial orders are multiplicative.
template <class Compare>
std::vector<Term> add_scaled(std::span<const Term> a, std::span<const Term> b,
                             const Rational &scale, const Monomial *shift, Compare cmp) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term shifted;
  auto load = [&](std::size_t k) {
    shifted.monomial = shift ? b[k].monomial * *shift : b[k].monomial;
    shifted.coefficient = scale * b[k].coefficient;
  };
  if (j < b.size())
    load(j);
  while (i < a.size() && j < b.size()) {
    auto c = cmp(a[i].monomial, shifted.monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(std::move(shifted));
      if (++j < b.size())
        load(j);
    } else {
      Rational sum = a[i].coefficient + shifted.coefficient;
      if (sgn(sum) != 0)
        out.push_back(Term{a[i].monomial, std::move(sum)});
      ++i;
      if (++j < b.size())
        load(j);
    }
  }
  for (; i < a.size(); ++i)
    out.push_back(a[i]);
  if (j < b.size()) {
    out.push_back(std::move(shifted));
    for (++j; j < b.size(); ++j) {
      load(j);
      out.push_back(std::move(shifted));
    }
  }
  return out;
}

/// Sorts descending under `cmp`, merges equal monomials and drops zeros.
template <class Compare>
void normalize_terms(std::vector<Term> &terms, Compare cmp) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term &x, const Term &y) { return cmp(x.monomial, y.monomial) > 0; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    Term acc = std::move(terms[r]);
    std::size_t k = r + 1;
    for (; k < terms.size() && terms[k].monomial == acc.monomial; ++k)
      acc.coefficient += terms[k].coefficient;
    r = k;
    if (sgn(acc.coefficient) != 0)
      terms[w++] = std::move(acc);
  }
  terms.resize(w);
}

struct DegrevlexCmp {
  std::strong_ordering operator()(const Monomial &a, const Monomial &b) const {
    return degrevlex_compare(a, b);
  }
};

} // namespace leinartas::detail
