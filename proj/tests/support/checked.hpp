#pragma once

// Every decomposition built by the test suites goes through these wrappers,
// which re-check the recombination identity independently of verify() and
// count how many decompositions were checked.

#include "leinartas/decompose.hpp"

#include <atomic>
#include <optional>
#include <vector>

namespace leinartas::testing {

struct RecombinationStats {
  std::atomic<std::size_t> checked{0};
  std::atomic<std::size_t> failed{0};
};

RecombinationStats &recombination_stats();

/// Sum of the terms, added pairwise as fractions, compared with the original
/// by cross multiplication.
bool independent_recombination(const Decomposition &dec);

/// leinartas_decompose + recombination postcondition (throws on failure).
Decomposition checked_decompose(const RationalExpression &f,
                                const std::optional<std::vector<FactorPower>> &factors = {});

/// normalize + recombination postcondition.
Decomposition checked_normalize(const Decomposition &dec);

/// Records an externally produced decomposition (throws on failure).
void check_recombination(const Decomposition &dec);

} // namespace leinartas::testing
