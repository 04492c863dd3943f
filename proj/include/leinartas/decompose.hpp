#pragma once

#include "leinartas/algdep.hpp"
#include "leinartas/nullstellensatz.hpp"
#include "leinartas/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace leinartas {

struct FactorPower {
  Polynomial factor;
  std::uint32_t exponent;
};

/// q = unit * prod factors[i].factor ^ factors[i].exponent, with monic,
/// nonconstant, pairwise coprime factors.
struct FactoredDenominator {
  Rational unit = 1;
  std::vector<FactorPower> factors;

  std::size_t size() const noexcept { return factors.size(); }
  /// The expanded product, unit included.
  Polynomial expand(const ContextPtr &ctx) const;
};

/// (index into the parent FactoredDenominator, exponent b_i).
struct DenominatorPart {
  std::size_t index;
  std::uint32_t exponent;

  friend auto operator<=>(const DenominatorPart &, const DenominatorPart &) = default;
};

/// One summand numerator / prod q_i^{b_i}. Indices strictly increase; an
/// empty denominator marks the polynomial part.
struct DecompositionTerm {
  Polynomial numerator;
  std::vector<DenominatorPart> denominator;

  bool is_polynomial_part() const noexcept { return denominator.empty(); }
};

using CertificateRecord = std::variant<NullCertificate, Annihilator>;

struct Decomposition {
  RationalExpression original;
  FactoredDenominator denominator;
  std::vector<DecompositionTerm> terms;
  std::vector<CertificateRecord> log;
};

struct TermReport {
  bool common_zero_ok = true;
  bool independence_ok = true;
  bool size_ok = true;

  bool ok() const noexcept { return common_zero_ok && independence_ok && size_ok; }
};

struct VerificationReport {
  bool sum_ok = false;
  std::vector<TermReport> terms;
  bool overall = false;
};

/// Pairwise-coprime, square-free refinement of prod candidates[i]^e_i.
/// Monomial content is split into single variables, then gcds with the
/// other candidates, with partial derivatives, and with the content in each
/// variable are pulled apart until nothing changes. Scalars end up in `unit`.
FactoredDenominator coprime_refine(const std::vector<FactorPower> &candidates);

/// Pass 1. Splits p/q until every term's factor set has a common zero.
std::vector<DecompositionTerm> null_decompose(const Polynomial &p, const FactoredDenominator &q,
                                              std::vector<CertificateRecord> *log = nullptr);

/// Pass 2. Splits one term until every term's factor set is algebraically
/// independent. Exponents may grow past the input's.
std::vector<DecompositionTerm> algdep_decompose(const DecompositionTerm &term,
                                                const FactoredDenominator &q,
                                                std::vector<CertificateRecord> *log = nullptr);

/// Full pipeline: refine the denominator (or adopt `factors`, whose product
/// must equal f's denominator up to a nonzero scalar), then pass 1, then
/// pass 2 on each resulting term. Terms with equal denominators are merged.
Decomposition leinartas_decompose(const RationalExpression &f,
                                  const std::optional<std::vector<FactorPower>> &factors = {});

/// Merges equal denominators, reduces every numerator modulo its expanded
/// denominator (quotients go to the polynomial part) and drops zero terms.
Decomposition normalize(const Decomposition &dec);

/// Exact recombination check plus the per-term structural conditions.
VerificationReport verify(const Decomposition &dec);

/// Exact check that the terms sum to the original expression.
bool recombines(const Decomposition &dec);

/// Re-checks every logged certificate.
bool replay_log(const Decomposition &dec);

/// Sum of the terms as a single fraction over prod q_i^{max b_i}.
RationalExpression recombine(const Decomposition &dec);

} // namespace leinartas
