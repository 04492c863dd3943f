#pragma once

#include "leinartas/polynomial.hpp"

#include <vector>

namespace leinartas {

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Nonzero g in fresh indeterminates Y_1..Y_m with g(inputs) == 0.
struct Annihilator {
  std::vector<Polynomial> inputs;
  ContextPtr y_context; // Y_1..Y_m
  Polynomial poly;
  std::vector<Monomial> support; // exponent vectors with nonzero coefficient, in poly's order

  bool verify() const;
};

/// m x d matrix of partial derivatives d polys[i] / d X_j.
PolynomialMatrix jacobian(const std::vector<Polynomial> &polys);

/// Rank over the rational function field Q(X), by fraction-free elimination
/// on the polynomial entries.
std::size_t rank(PolynomialMatrix matrix);

/// Jacobian criterion (characteristic 0). Sets with more members than
/// variables are dependent outright. Throws UsageError on constant input.
bool is_algebraically_independent(const std::vector<Polynomial> &polys);

/// Annihilating polynomial from the elimination ideal
/// <Y_i - polys[i]> ∩ Q[Y]. Among the Y-only members of the reduced basis the
/// one of least total degree, then fewest terms, then smallest leading
/// monomial is returned. Throws DomainError for independent input.
Annihilator annihilating_polynomial(const std::vector<Polynomial> &polys);

} // namespace leinartas
