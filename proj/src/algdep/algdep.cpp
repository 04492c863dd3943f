#include "leinartas/algdep.hpp"

#include "leinartas/errors.hpp"
#include "leinartas/groebner.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

namespace leinartas {

namespace {

void require_common_context(const std::vector<Polynomial> &polys) {
  for (const auto &p : polys)
    if (!same_context(p.context(), polys[0].context()))
      throw UsageError("polynomials belong to different variable contexts");
}

// Pivot preference: fewest terms, then lowest total degree.
bool smaller_pivot(const Polynomial &a, const Polynomial &b) {
  return std::make_tuple(a.size(), a.total_degree()) < std::make_tuple(b.size(), b.total_degree());
}

} // namespace

bool Annihilator::verify() const {
  if (poly.is_zero() || inputs.empty() || inputs.size() != y_context->size())
    return false;
  return poly.substitute(inputs).is_zero();
}

PolynomialMatrix jacobian(const std::vector<Polynomial> &polys) {
  PolynomialMatrix out;
  if (polys.empty())
    return out;
  require_common_context(polys);
  const std::size_t d = polys[0].num_vars();
  for (const auto &p : polys) {
    std::vector<Polynomial> row;
    row.reserve(d);
    for (std::size_t j = 0; j < d; ++j)
      row.push_back(p.derivative(j));
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t rank(PolynomialMatrix a) {
  if (a.empty() || a[0].empty())
    return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  Polynomial prev = Polynomial::constant(a[0][0].context(), 1);
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (!a[i][j].is_zero() &&
            (!pivot || smaller_pivot(a[i][j], a[pivot->first][pivot->second])))
          pivot = {i, j};
    if (!pivot)
      break;
    std::swap(a[r], a[pivot->first]);
    if (pivot->second != r)
      for (auto &row : a)
        std::swap(row[r], row[pivot->second]);
    // Bareiss step: every updated entry is a minor of the original matrix,
    // so the division by the previous pivot is exact.
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j)
        a[i][j] = exact_divide(a[r][r] * a[i][j] - a[i][r] * a[r][j], prev);
      a[i][r] = Polynomial(a[i][r].context());
    }
    prev = a[r][r];
  }
  return r;
}

bool is_algebraically_independent(const std::vector<Polynomial> &polys) {
  if (polys.empty())
    return true;
  require_common_context(polys);
  for (const auto &p : polys)
    if (p.is_constant())
      throw UsageError("algebraic independence is undefined for constant input " + p.to_string());
  if (polys.size() > polys[0].num_vars())
    return false;
  return rank(jacobian(polys)) == polys.size();
}

Annihilator annihilating_polynomial(const std::vector<Polynomial> &polys) {
  if (polys.empty())
    throw UsageError("annihilator needs at least one polynomial");
  require_common_context(polys);
  bool has_constant = std::any_of(polys.begin(), polys.end(),
                                  [](const Polynomial &p) { return p.is_constant(); });
  if (!has_constant && is_algebraically_independent(polys))
    throw DomainError("the polynomials are algebraically independent; no annihilator exists");

  const auto &xctx = polys[0].context();
  const std::size_t d = xctx->size();
  const std::size_t m = polys.size();

  std::vector<std::string> ynames;
  for (std::size_t i = 0; i < m; ++i)
    ynames.push_back("Y" + std::to_string(i + 1));
  auto yctx = make_context(ynames);

  // Combined ring Q[X, Y] with the Y names made distinct from the X names.
  auto names = xctx->names();
  for (const auto &y : ynames)
    names.push_back(make_context(names)->fresh_name(y));
  auto full = make_context(names);
  std::vector<std::size_t> xmap(d);
  for (std::size_t i = 0; i < d; ++i)
    xmap[i] = i;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Polynomial::variable(full, d + i) - polys[i].embed(full, xmap));
  std::vector<bool> keep(d + m, false);
  for (std::size_t i = 0; i < m; ++i)
    keep[d + i] = true;
  auto elim = eliminate(gens, keep);
  if (elim.empty())
    throw InternalError("dependent polynomials produced an empty elimination ideal");

  auto key = [](const Polynomial &p) { return std::make_tuple(p.total_degree(), p.size()); };
  auto best = std::min_element(elim.begin(), elim.end(),
                               [&](const Polynomial &a, const Polynomial &b) {
                                 if (key(a) != key(b))
                                   return key(a) < key(b);
                                 return degrevlex_compare(a.leading_term().monomial,
                                                          b.leading_term().monomial) < 0;
                               });

  std::vector<Term> yterms;
  for (const auto &t : best->terms()) {
    const auto &e = t.monomial.exponents();
    yterms.push_back(Term{Monomial(std::vector<Monomial::exponent_type>(e.begin() + d, e.end())),
                          t.coefficient});
  }
  Annihilator out{polys, yctx, Polynomial::canonicalize(yctx, std::move(yterms)), {}};
  for (const auto &t : out.poly.terms())
    out.support.push_back(t.monomial);
  if (!out.verify())
    throw InternalError("annihilator does not vanish on its inputs");
  return out;
}

} // namespace leinartas
