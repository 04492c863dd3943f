#pragma once

#include "leinartas/polynomial.hpp"

#include <optional>
#include <vector>

namespace leinartas {

/// Cofactors h_1..h_m over Q with sum h_i * inputs[i] == 1.
struct NullCertificate {
  std::vector<Polynomial> inputs;
  std::vector<Polynomial> cofactors;

  /// Exact check of the identity.
  bool verify() const;
};

/// True iff the polynomials vanish simultaneously somewhere over the
/// algebraic closure of Q, i.e. 1 is not in the ideal they generate.
/// Throws UsageError on an empty list or a zero polynomial.
bool has_common_zero(const std::vector<Polynomial> &polys);

/// Certificate for a system without common zero. Throws DomainError when a
/// common zero exists.
NullCertificate certificate(const std::vector<Polynomial> &polys);

/// Both at once: a certificate when there is no common zero, nullopt when
/// there is one.
std::optional<NullCertificate> find_certificate(const std::vector<Polynomial> &polys);

} // namespace leinartas
