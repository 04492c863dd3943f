#pragma once

#include "leinartas/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace leinartas {

/// Monomial order on a fixed context. A block order compares the leading
/// block first (degrevlex restricted to it) and breaks ties with degrevlex on
/// the trailing block; the blocks may interleave in the context's variable
/// order.
class MonomialOrder {
public:
  enum class Kind { lex, degrevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, {}); }
  /// `leading[i]` marks variable i as belonging to the leading block.
  static MonomialOrder block(std::vector<bool> leading);

  Kind kind() const noexcept { return kind_; }
  const std::vector<bool> &leading_block() const noexcept { return leading_; }

  std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
  std::strong_ordering operator()(const Monomial &a, const Monomial &b) const {
    return compare(a, b);
  }

private:
  MonomialOrder(Kind k, std::vector<bool> leading) : kind_(k), leading_(std::move(leading)) {}

  Kind kind_;
  std::vector<bool> leading_;
};

std::strong_ordering compare(const MonomialOrder &order, const Monomial &a, const Monomial &b);

/// Leading term of a nonzero polynomial under `order`.
const Term &leading_term(const Polynomial &p, const MonomialOrder &order);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division. Each step reduces the current leading term by the
/// first divisor whose leading monomial divides it, else moves that term to
/// the remainder. dividend == sum quotients[i]*divisors[i] + remainder.
DivisionResult divide(const Polynomial &dividend, const std::vector<Polynomial> &divisors,
                      const MonomialOrder &order = MonomialOrder::degrevlex());

/// Exact quotient a / b; throws InternalError if b does not divide a.
Polynomial exact_divide(const Polynomial &a, const Polynomial &b);

/// Reduced Groebner basis plus, optionally, how each basis element is built
/// from the generators: basis[k] == sum_i representation[k][i] * generators[i].
struct TrackedBasis {
  std::vector<Polynomial> generators;
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> representation; // empty unless tracked
  MonomialOrder order = MonomialOrder::degrevlex();
  bool tracked = false;

  bool is_unit_ideal() const noexcept { return basis.size() == 1 && basis[0].is_one(); }
};

/// Buchberger's algorithm with the coprime and chain criteria and normal
/// pair selection. Returns the reduced (monic, inter-reduced) basis sorted
/// ascending by leading monomial.
TrackedBasis buchberger(const std::vector<Polynomial> &generators,
                        const MonomialOrder &order = MonomialOrder::degrevlex(),
                        bool track = false);

/// True iff 1 lies in the ideal generated by `generators`.
bool ideal_contains_one(const std::vector<Polynomial> &generators);

/// Basis of the elimination ideal <generators> ∩ Q[kept variables]: the
/// members of the reduced basis under the block order that puts every
/// non-kept variable in the leading block and involve only kept variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial> &generators,
                                  const std::vector<bool> &keep);

/// Monic gcd, computed as a*b divided by the generator of <a> ∩ <b>.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

} // namespace leinartas
