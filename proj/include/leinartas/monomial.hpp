#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace leinartas {

/// Exponent vector of a power product X_1^{a_1} ... X_d^{a_d}.
class Monomial {
public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps);
  Monomial(std::initializer_list<exponent_type> exps)
      : Monomial(std::vector<exponent_type>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, exponent_type power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<exponent_type> &exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial &other) const;

  Monomial operator*(const Monomial &other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial &divisor) const;
  Monomial pow(exponent_type e) const;

  friend Monomial lcm(const Monomial &a, const Monomial &b);
  friend Monomial gcd(const Monomial &a, const Monomial &b);

  friend bool operator==(const Monomial &a, const Monomial &b) { return a.exps_ == b.exps_; }

private:
  std::vector<exponent_type> exps_;
  std::uint64_t degree_ = 0;
};

/// Graded reverse lexicographic comparison with variable 0 largest.
std::strong_ordering degrevlex_compare(const Monomial &a, const Monomial &b);

/// Plain lexicographic comparison of exponent vectors.
std::strong_ordering lex_compare(const Monomial &a, const Monomial &b);

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const noexcept;
};

} // namespace leinartas
