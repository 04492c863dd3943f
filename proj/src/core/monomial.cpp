#include "leinartas/monomial.hpp"

#include "leinartas/errors.hpp"

#include <algorithm>
#include <numeric>

namespace leinartas {

Monomial::Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, exponent_type power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial &other) const {
  if (degree_ > other.degree_)
    return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial &divisor) const {
  if (!divisor.divides(*this))
    throw InternalError("inexact monomial division");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::pow(exponent_type e) const {
  Monomial r(*this);
  for (auto &x : r.exps_)
    x *= e;
  r.degree_ *= e;
  return r;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
  std::vector<Monomial::exponent_type> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial &a, const Monomial &b) {
  std::vector<Monomial::exponent_type> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

std::strong_ordering degrevlex_compare(const Monomial &a, const Monomial &b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  // Same degree: the monomial with the smaller exponent in the last differing
  // variable is the larger one.
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace leinartas
