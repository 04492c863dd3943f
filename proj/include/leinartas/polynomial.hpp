#pragma once

#include "leinartas/monomial.hpp"
#include "leinartas/rational.hpp"
#include "leinartas/variable_context.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace leinartas {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse distributed polynomial over Q.
///
/// Terms are kept in canonical form: no duplicate monomials, no zero
/// coefficients, sorted strictly descending under degrevlex in the context's
/// variable order. Since the representation is canonical, equality is
/// structural. Values are immutable once constructed.
class Polynomial {
public:
  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational &c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial monomial(ContextPtr ctx, Monomial m, const Rational &c = 1);

  /// Merges duplicates, drops zeros and sorts. Throws UsageError when an
  /// exponent vector has the wrong length.
  static Polynomial canonicalize(ContextPtr ctx, std::vector<Term> terms);

  /// Adopts terms that are already canonical. Unchecked.
  static Polynomial from_sorted(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr &context() const noexcept { return ctx_; }
  std::size_t num_vars() const noexcept { return ctx_->size(); }
  const std::vector<Term> &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  std::uint64_t total_degree() const noexcept;
  /// Degree in variable `index`.
  std::uint64_t degree_in(std::size_t index) const;
  bool involves(std::size_t index) const;

  /// Leading term under degrevlex. Requires a nonzero polynomial.
  const Term &leading_term() const;
  const Rational &leading_coefficient() const { return leading_term().coefficient; }
  /// Constant coefficient (zero when absent).
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &b);
  Polynomial &operator-=(const Polynomial &b);
  Polynomial &operator*=(const Polynomial &b);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Rational &c, const Polynomial &a);
  Polynomial mul_term(const Monomial &m, const Rational &c) const;

  Polynomial pow(std::uint64_t e) const;
  Polynomial derivative(std::size_t var_index) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Re-expresses this polynomial in `target`, sending variable i to variable
  /// `var_map[i]` of the target context.
  Polynomial embed(ContextPtr target, std::span<const std::size_t> var_map) const;

  /// Substitutes `images[i]` (all in one common context) for variable i.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Canonical text: explicit `*` and `^`, coefficients as n or n/d.
  std::string to_string() const;

  friend bool operator==(const Polynomial &a, const Polynomial &b);

private:
  Polynomial(ContextPtr ctx, std::vector<Term> terms);
  void require_same_context(const Polynomial &b) const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Structural equality after canonicalization, i.e. a - b == 0.
inline bool poly_equal(const Polynomial &a, const Polynomial &b) { return a == b; }

/// Total order used to sort polynomials deterministically (by total degree,
/// then term by term under degrevlex, then coefficients).
std::strong_ordering canonical_compare(const Polynomial &a, const Polynomial &b);

/// f = numerator / denominator with a nonzero denominator. Not reduced.
struct RationalExpression {
  Polynomial numerator;
  Polynomial denominator;

  RationalExpression(Polynomial num, Polynomial den);

  /// Equality as elements of Q(X): cross-multiplied numerators agree.
  bool equivalent(const RationalExpression &other) const;
};

} // namespace leinartas
