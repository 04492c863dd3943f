#include "leinartas/polynomial.hpp"

#include "leinartas/detail/term_ops.hpp"
#include "leinartas/errors.hpp"

#include <algorithm>
#include <sstream>

namespace leinartas {

using detail::DegrevlexCmp;

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_)
    throw UsageError("polynomial needs a variable context");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational &c) {
  Polynomial p(std::move(ctx));
  if (sgn(c) != 0)
    p.terms_.push_back(Term{Monomial(p.num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  if (!ctx || index >= ctx->size())
    throw UsageError("variable index out of range");
  auto n = ctx->size();
  return monomial(std::move(ctx), Monomial::variable(n, index));
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rational &c) {
  Polynomial p(std::move(ctx));
  if (m.size() != p.num_vars())
    throw UsageError("exponent vector length does not match the context");
  if (sgn(c) != 0)
    p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Polynomial Polynomial::canonicalize(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  for (const auto &t : terms)
    if (t.monomial.size() != p.num_vars())
      throw UsageError("exponent vector length does not match the context");
  detail::normalize_terms(terms, DegrevlexCmp{});
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_sorted(ContextPtr ctx, std::vector<Term> terms) {
  return Polynomial(std::move(ctx), std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  // Degrevlex is graded, so the leading term has maximal degree.
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint64_t Polynomial::degree_in(std::size_t index) const {
  if (index >= num_vars())
    throw UsageError("variable index out of range");
  std::uint64_t d = 0;
  for (const auto &t : terms_)
    d = std::max<std::uint64_t>(d, t.monomial[index]);
  return d;
}

bool Polynomial::involves(std::size_t index) const { return degree_in(index) > 0; }

const Term &Polynomial::leading_term() const {
  if (terms_.empty())
    throw UsageError("zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one())
    return terms_.back().coefficient;
  return 0;
}

void Polynomial::require_same_context(const Polynomial &b) const {
  if (!same_context(ctx_, b.ctx_))
    throw UsageError("polynomials belong to different variable contexts");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto &t : r.terms_)
    t.coefficient = -t.coefficient;
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &b) {
  require_same_context(b);
  terms_ = detail::add_scaled(std::span<const Term>(terms_), std::span<const Term>(b.terms_),
                              Rational(1), nullptr, DegrevlexCmp{});
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &b) {
  require_same_context(b);
  terms_ = detail::add_scaled(std::span<const Term>(terms_), std::span<const Term>(b.terms_),
                              Rational(-1), nullptr, DegrevlexCmp{});
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.require_same_context(b);
  if (a.is_zero() || b.is_zero())
    return Polynomial(a.ctx_);
  if (b.size() == 1)
    return a.mul_term(b.terms_[0].monomial, b.terms_[0].coefficient);
  if (a.size() == 1)
    return b.mul_term(a.terms_[0].monomial, a.terms_[0].coefficient);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto &x : a.terms_)
    for (const auto &y : b.terms_)
      prod.push_back(Term{x.monomial * y.monomial, x.coefficient * y.coefficient});
  detail::normalize_terms(prod, DegrevlexCmp{});
  return Polynomial(a.ctx_, std::move(prod));
}

Polynomial &Polynomial::operator*=(const Polynomial &b) { return *this = *this * b; }

Polynomial operator*(const Rational &c, const Polynomial &a) {
  if (sgn(c) == 0)
    return Polynomial(a.ctx_);
  Polynomial r(a);
  for (auto &t : r.terms_)
    t.coefficient *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial &m, const Rational &c) const {
  if (m.size() != num_vars())
    throw UsageError("exponent vector length does not match the context");
  if (sgn(c) == 0)
    return Polynomial(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_)
    out.push_back(Term{t.monomial * m, t.coefficient * c});
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
  if (var_index >= num_vars())
    throw UsageError("variable index out of range");
  std::vector<Term> out;
  for (const auto &t : terms_) {
    auto e = t.monomial[var_index];
    if (e == 0)
      continue;
    auto exps = t.monomial.exponents();
    exps[var_index] -= 1;
    out.push_back(Term{Monomial(std::move(exps)), t.coefficient * e});
  }
  // Lowering an exponent is not order preserving under degrevlex.
  detail::normalize_terms(out, DegrevlexCmp{});
  return Polynomial(ctx_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars())
    throw UsageError("evaluation point has the wrong dimension");
  // Power tables per variable, built lazily up to the degree needed.
  std::vector<std::vector<Rational>> powers(point.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Rational & {
    auto &tab = powers[var];
    if (tab.empty())
      tab.push_back(Rational(1));
    while (tab.size() <= e)
      tab.push_back(tab.back() * point[var]);
    return tab[e];
  };
  Rational sum = 0;
  for (const auto &t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i] != 0)
        v *= power(i, t.monomial[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return *this;
  Rational inv = 1 / leading_coefficient();
  return inv * *this;
}

Polynomial Polynomial::embed(ContextPtr target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != num_vars())
    throw UsageError("variable map has the wrong length");
  for (auto v : var_map)
    if (v >= target->size())
      throw UsageError("variable map points outside the target context");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_) {
    std::vector<Monomial::exponent_type> e(target->size(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i)
      e[var_map[i]] += t.monomial[i];
    out.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return canonicalize(std::move(target), std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_vars())
    throw UsageError("substitution needs one image per variable");
  const auto &target = images[0].context();
  for (const auto &img : images)
    if (!same_context(img.context(), target))
      throw UsageError("substitution images live in different contexts");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, std::uint32_t e) -> const Polynomial & {
    auto &tab = powers[var];
    if (tab.empty())
      tab.push_back(constant(target, 1));
    while (tab.size() <= e)
      tab.push_back(tab.back() * images[var]);
    return tab[e];
  };
  Polynomial sum(target);
  for (const auto &t : terms_) {
    Polynomial v = constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0)
        v = v * power(i, t.monomial[i]);
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    bool negative = sgn(t.coefficient) < 0;
    Rational mag = abs(t.coefficient);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < num_vars(); ++i) {
      auto e = t.monomial[i];
      if (e == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += ctx_->name(i);
      if (e > 1)
        mono += '^' + std::to_string(e);
    }
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << '*' << mono;
  }
  return os.str();
}

bool operator==(const Polynomial &a, const Polynomial &b) {
  a.require_same_context(b);
  return a.terms_ == b.terms_;
}

std::strong_ordering canonical_compare(const Polynomial &a, const Polynomial &b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0)
    return c;
  const auto &ta = a.terms();
  const auto &tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    // Larger leading monomials sort first among equal-degree polynomials.
    if (auto c = degrevlex_compare(tb[i].monomial, ta[i].monomial); c != 0)
      return c;
  }
  if (auto c = ta.size() <=> tb.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    int c = cmp(ta[i].coefficient, tb[i].coefficient);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RationalExpression::RationalExpression(Polynomial num, Polynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (!same_context(numerator.context(), denominator.context()))
    throw UsageError("numerator and denominator belong to different contexts");
  if (denominator.is_zero())
    throw DomainError("zero denominator");
}

bool RationalExpression::equivalent(const RationalExpression &other) const {
  return numerator * other.denominator == other.numerator * denominator;
}

} // namespace leinartas
