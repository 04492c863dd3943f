#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace leinartas::testing {

namespace {

void monomials_rec(std::size_t nvars, unsigned budget, std::vector<Monomial::exponent_type> &cur,
                   std::size_t var, std::vector<Monomial> &out) {
  if (var == nvars) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    cur[var] = e;
    monomials_rec(nvars, budget - e, cur, var + 1, out);
  }
  cur[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<Monomial::exponent_type> cur(nvars, 0);
  monomials_rec(nvars, max_degree, cur, 0, out);
  return out;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a[r][j]) != 0)
        a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0)
        continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r][j]) != 0)
          a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0)
      return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = b[i];
  return x;
}

std::optional<std::vector<Polynomial>> bounded_unit_cofactors(const std::vector<Polynomial> &polys,
                                                              unsigned cofactor_degree) {
  const auto &ctx = polys.at(0).context();
  const std::size_t d = ctx->size();
  auto basis = monomials_up_to(d, cofactor_degree);
  std::uint64_t max_deg = 0;
  for (const auto &p : polys)
    max_deg = std::max(max_deg, p.total_degree());
  auto rows_mono = monomials_up_to(d, cofactor_degree + static_cast<unsigned>(max_deg));
  std::map<std::vector<Monomial::exponent_type>, std::size_t> row_of;
  for (std::size_t i = 0; i < rows_mono.size(); ++i)
    row_of[rows_mono[i].exponents()] = i;

  const std::size_t cols = basis.size() * polys.size();
  std::vector<std::vector<Rational>> a(rows_mono.size(), std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(rows_mono.size(), Rational(0));
  b[row_of.at(Monomial(d).exponents())] = 1;
  for (std::size_t k = 0; k < polys.size(); ++k)
    for (std::size_t u = 0; u < basis.size(); ++u)
      for (const auto &t : polys[k].terms())
        a[row_of.at((t.monomial * basis[u]).exponents())][k * basis.size() + u] += t.coefficient;

  auto x = solve_linear(std::move(a), std::move(b));
  if (!x)
    return std::nullopt;
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    std::vector<Term> terms;
    for (std::size_t u = 0; u < basis.size(); ++u)
      terms.push_back(Term{basis[u], (*x)[k * basis.size() + u]});
    out.push_back(Polynomial::canonicalize(ctx, std::move(terms)));
  }
  return out;
}

std::vector<Rational> univariate_partial_fractions(const Polynomial &p,
                                                   const std::vector<Rational> &roots) {
  // p = sum_i c_i prod_{j != i} (X - r_j); match coefficients of X^0..X^{n-1}.
  const std::size_t n = roots.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(n, Rational(0));
  for (const auto &t : p.terms())
    b.at(t.monomial[0]) = t.coefficient;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> poly{Rational(1)}; // coefficients, low degree first
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i)
        continue;
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= roots[j] * poly[k];
      }
      poly = std::move(next);
    }
    for (std::size_t k = 0; k < poly.size(); ++k)
      a[k][i] = poly[k];
  }
  return *solve_linear(std::move(a), std::move(b));
}

Polynomial random_polynomial(const ContextPtr &ctx, unsigned max_degree, unsigned max_terms,
                             int coef, std::mt19937 &rng) {
  auto monos = monomials_up_to(ctx->size(), max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> cdist(-coef, coef);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::vector<Term> terms;
  for (unsigned k = nterms(rng); k > 0; --k)
    terms.push_back(Term{monos[pick(rng)], Rational(cdist(rng))});
  return Polynomial::canonicalize(ctx, std::move(terms));
}

Polynomial random_nonconstant(const ContextPtr &ctx, unsigned max_degree, unsigned max_terms,
                              int coef, std::mt19937 &rng) {
  for (;;) {
    auto p = random_polynomial(ctx, max_degree, max_terms, coef, rng);
    if (!p.is_constant())
      return p;
  }
}

Rational random_rational(std::mt19937 &rng, int range) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

} // namespace leinartas::testing
