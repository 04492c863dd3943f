#include "leinartas/groebner.hpp"

#include "leinartas/detail/term_ops.hpp"
#include "leinartas/errors.hpp"

#include <algorithm>
#include <optional>
#include <map>
#include <utility>

namespace leinartas {

MonomialOrder MonomialOrder::block(std::vector<bool> leading) {
  return MonomialOrder(Kind::block, std::move(leading));
}

namespace {

// Degrevlex restricted to the variables where mask[i] == want.
std::strong_ordering masked_degrevlex(const Monomial &a, const Monomial &b,
                                      const std::vector<bool> &mask, bool want) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask[i] == want) {
      da += a[i];
      db += b[i];
    }
  if (auto c = da <=> db; c != 0)
    return c;
  for (std::size_t i = a.size(); i-- > 0;)
    if (mask[i] == want && a[i] != b[i])
      return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  switch (kind_) {
  case Kind::lex:
    return lex_compare(a, b);
  case Kind::degrevlex:
    return degrevlex_compare(a, b);
  case Kind::block:
    if (leading_.size() != a.size())
      throw UsageError("block order does not match the number of variables");
    if (auto c = masked_degrevlex(a, b, leading_, true); c != 0)
      return c;
    return masked_degrevlex(a, b, leading_, false);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const MonomialOrder &order, const Monomial &a, const Monomial &b) {
  return order.compare(a, b);
}

const Term &leading_term(const Polynomial &p, const MonomialOrder &order) {
  if (p.is_zero())
    throw UsageError("zero polynomial has no leading term");
  if (order.kind() == MonomialOrder::Kind::degrevlex)
    return p.leading_term();
  const auto &ts = p.terms();
  auto it = std::max_element(ts.begin(), ts.end(), [&](const Term &x, const Term &y) {
    return order.compare(x.monomial, y.monomial) < 0;
  });
  return *it;
}

namespace {

using TermVec = std::vector<Term>;

TermVec ordered_terms(const Polynomial &p, const MonomialOrder &order) {
  TermVec t = p.terms();
  if (order.kind() != MonomialOrder::Kind::degrevlex)
    std::sort(t.begin(), t.end(), [&](const Term &x, const Term &y) {
      return order.compare(x.monomial, y.monomial) > 0;
    });
  return t;
}

Polynomial to_polynomial(const ContextPtr &ctx, TermVec terms, const MonomialOrder &order) {
  if (order.kind() == MonomialOrder::Kind::degrevlex)
    return Polynomial::from_sorted(ctx, std::move(terms));
  return Polynomial::canonicalize(ctx, std::move(terms));
}

// A polynomial in the order's term layout together with its cofactors with
// respect to the generators (only populated when tracking).
struct Element {
  TermVec poly;
  std::vector<TermVec> rep;
  std::uint64_t sugar = 0;

  const Monomial &lm() const { return poly.front().monomial; }
  const Rational &lc() const { return poly.front().coefficient; }
};

void scale(Element &e, const Rational &c) {
  for (auto &t : e.poly)
    t.coefficient *= c;
  for (auto &r : e.rep)
    for (auto &t : r)
      t.coefficient *= c;
}

// f <- f - c * m * g, on both the polynomial and the tracked cofactors.
void subtract_multiple(Element &f, std::size_t head, const Element &g, const Rational &c,
                       const Monomial &m, const MonomialOrder &order, bool track) {
  f.poly = detail::add_scaled(std::span<const Term>(f.poly).subspan(head),
                              std::span<const Term>(g.poly), Rational(-c), &m, order);
  if (track)
    for (std::size_t i = 0; i < f.rep.size(); ++i)
      f.rep[i] = detail::add_scaled(std::span<const Term>(f.rep[i]),
                                    std::span<const Term>(g.rep[i]), Rational(-c), &m, order);
}

// Full reduction of f against the listed elements (all terms, not only the
// leading one).
void reduce_full(Element &f, const std::vector<const Element *> &basis,
                 const MonomialOrder &order, bool track) {
  TermVec remainder;
  std::size_t head = 0;
  while (head < f.poly.size()) {
    const Term &lt = f.poly[head];
    const Element *reducer = nullptr;
    for (const Element *g : basis)
      if (g->lm().divides(lt.monomial)) {
        reducer = g;
        break;
      }
    if (!reducer) {
      remainder.push_back(lt);
      ++head;
      continue;
    }
    Rational c = lt.coefficient / reducer->lc();
    Monomial m = lt.monomial / reducer->lm();
    subtract_multiple(f, head, *reducer, c, m, order, track);
    head = 0;
  }
  f.poly = std::move(remainder);
}

bool is_constant_terms(const TermVec &t) { return t.size() == 1 && t[0].monomial.is_one(); }

TrackedBasis unit_result(const std::vector<Polynomial> &generators, const ContextPtr &ctx,
                         Element e, const MonomialOrder &order, bool track) {
  scale(e, 1 / e.lc());
  TrackedBasis out;
  out.generators = generators;
  out.order = order;
  out.tracked = track;
  out.basis.push_back(Polynomial::constant(ctx, 1));
  if (track) {
    std::vector<Polynomial> rep;
    for (auto &r : e.rep)
      rep.push_back(to_polynomial(ctx, std::move(r), order));
    out.representation.push_back(std::move(rep));
  }
  return out;
}

struct PairKey {
  std::size_t i, j;
  friend auto operator<=>(const PairKey &, const PairKey &) = default;
};

} // namespace

DivisionResult divide(const Polynomial &dividend, const std::vector<Polynomial> &divisors,
                      const MonomialOrder &order) {
  if (divisors.empty())
    throw UsageError("division needs at least one divisor");
  const auto &ctx = dividend.context();
  std::vector<TermVec> ds;
  for (const auto &d : divisors) {
    if (!same_context(d.context(), ctx))
      throw UsageError("divisor belongs to a different variable context");
    if (d.is_zero())
      throw UsageError("division by the zero polynomial");
    ds.push_back(ordered_terms(d, order));
  }
  std::vector<TermVec> quotients(divisors.size());
  TermVec remainder;
  TermVec p = ordered_terms(dividend, order);
  std::size_t head = 0;
  while (head < p.size()) {
    const Term &lt = p[head];
    bool reduced = false;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const Term &dl = ds[k].front();
      if (!dl.monomial.divides(lt.monomial))
        continue;
      Rational c = lt.coefficient / dl.coefficient;
      Monomial m = lt.monomial / dl.monomial;
      quotients[k].push_back(Term{m, c});
      p = detail::add_scaled(std::span<const Term>(p).subspan(head), std::span<const Term>(ds[k]),
                             Rational(-c), &m, order);
      head = 0;
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      ++head;
    }
  }
  DivisionResult out{{}, Polynomial(ctx)};
  for (auto &q : quotients)
    out.quotients.push_back(to_polynomial(ctx, std::move(q), order));
  out.remainder = to_polynomial(ctx, std::move(remainder), order);
  return out;
}

Polynomial exact_divide(const Polynomial &a, const Polynomial &b) {
  if (b.is_zero())
    throw UsageError("division by the zero polynomial");
  auto r = divide(a, {b});
  if (!r.remainder.is_zero())
    throw InternalError("exact division left a nonzero remainder");
  return std::move(r.quotients[0]);
}

TrackedBasis buchberger(const std::vector<Polynomial> &generators, const MonomialOrder &order,
                        bool track) {
  if (generators.empty())
    throw UsageError("buchberger needs at least one generator");
  const ContextPtr &ctx = generators[0].context();
  const std::size_t m = generators.size();
  const std::size_t nvars = ctx->size();

  std::vector<Element> basis;
  basis.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!same_context(generators[i].context(), ctx))
      throw UsageError("generators belong to different variable contexts");
    if (generators[i].is_zero())
      continue;
    Element e;
    e.poly = ordered_terms(generators[i], order);
    e.sugar = generators[i].total_degree();
    if (track) {
      e.rep.assign(m, TermVec{});
      e.rep[i].push_back(Term{Monomial(nvars), Rational(1)});
    }
    if (is_constant_terms(e.poly))
      return unit_result(generators, ctx, std::move(e), order, track);
    basis.push_back(std::move(e));
  }

  // Pending pairs with their sugar degree.
  std::map<PairKey, std::uint64_t> pending;
  auto pair_lcm = [&](const PairKey &p) { return lcm(basis[p.i].lm(), basis[p.j].lm()); };
  auto add_pair = [&](std::size_t i, std::size_t j) {
    Monomial l = pair_lcm({i, j});
    std::uint64_t si = basis[i].sugar + l.degree() - basis[i].lm().degree();
    std::uint64_t sj = basis[j].sugar + l.degree() - basis[j].lm().degree();
    pending.emplace(PairKey{i, j}, std::max(si, sj));
  };
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      add_pair(i, j);

  while (!pending.empty()) {
    // Sugar strategy: lowest sugar first, then smallest lcm.
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(best->first);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      if (it->second > best->second)
        continue;
      Monomial l = pair_lcm(it->first);
      if (it->second < best->second || order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    PairKey pr = best->first;
    std::uint64_t sugar = best->second;
    pending.erase(best);
    const Element &gi = basis[pr.i];
    const Element &gj = basis[pr.j];

    if (gcd(gi.lm(), gj.lm()).is_one())
      continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || !basis[k].lm().divides(best_lcm))
        continue;
      PairKey ik{std::min(pr.i, k), std::max(pr.i, k)};
      PairKey jk{std::min(pr.j, k), std::max(pr.j, k)};
      chain = !pending.contains(ik) && !pending.contains(jk);
    }
    if (chain)
      continue;

    Element s;
    Monomial mi = best_lcm / gi.lm();
    Monomial mj = best_lcm / gj.lm();
    Rational ci = 1 / gi.lc();
    Rational cj = 1 / gj.lc();
    s.poly = detail::add_scaled(std::span<const Term>(), std::span<const Term>(gi.poly), ci, &mi,
                                order);
    s.poly = detail::add_scaled(std::span<const Term>(s.poly), std::span<const Term>(gj.poly),
                                Rational(-cj), &mj, order);
    if (track) {
      s.rep.resize(m);
      for (std::size_t k = 0; k < m; ++k) {
        s.rep[k] = detail::add_scaled(std::span<const Term>(), std::span<const Term>(gi.rep[k]),
                                      ci, &mi, order);
        s.rep[k] = detail::add_scaled(std::span<const Term>(s.rep[k]),
                                      std::span<const Term>(gj.rep[k]), Rational(-cj), &mj, order);
      }
    }
    std::vector<const Element *> reducers;
    for (const auto &g : basis)
      reducers.push_back(&g);
    reduce_full(s, reducers, order, track);
    if (s.poly.empty())
      continue;
    if (is_constant_terms(s.poly))
      return unit_result(generators, ctx, std::move(s), order, track);
    scale(s, 1 / s.lc());
    s.sugar = sugar;
    std::size_t n = basis.size();
    basis.push_back(std::move(s));
    for (std::size_t i = 0; i < n; ++i)
      add_pair(i, n);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (for equal leading monomials keep the first).
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k || !basis[l].lm().divides(basis[k].lm()))
        continue;
      redundant = !(basis[l].lm() == basis[k].lm()) || l < k;
    }
    if (!redundant)
      kept.push_back(k);
  }
  // Inter-reduce and normalize.
  for (std::size_t k : kept) {
    std::vector<const Element *> others;
    for (std::size_t l : kept)
      if (l != k)
        others.push_back(&basis[l]);
    reduce_full(basis[k], others, order, track);
    scale(basis[k], 1 / basis[k].lc());
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(basis[a].lm(), basis[b].lm()) < 0;
  });

  TrackedBasis out;
  out.generators = generators;
  out.order = order;
  out.tracked = track;
  for (std::size_t k : kept) {
    out.basis.push_back(to_polynomial(ctx, std::move(basis[k].poly), order));
    if (track) {
      std::vector<Polynomial> rep;
      for (auto &r : basis[k].rep)
        rep.push_back(to_polynomial(ctx, std::move(r), order));
      out.representation.push_back(std::move(rep));
    }
  }
  return out;
}

bool ideal_contains_one(const std::vector<Polynomial> &generators) {
  return buchberger(generators, MonomialOrder::degrevlex(), false).is_unit_ideal();
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial> &generators,
                                  const std::vector<bool> &keep) {
  std::vector<Polynomial> nonzero;
  for (const auto &g : generators)
    if (!g.is_zero())
      nonzero.push_back(g);
  if (nonzero.empty())
    return {};
  const auto &ctx = nonzero[0].context();
  if (keep.size() != ctx->size())
    throw UsageError("keep mask does not match the number of variables");
  std::vector<bool> leading(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    leading[i] = !keep[i];
  auto gb = buchberger(nonzero, MonomialOrder::block(std::move(leading)), false);
  std::vector<Polynomial> out;
  for (auto &g : gb.basis) {
    bool only_kept = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term &t) {
      for (std::size_t i = 0; i < keep.size(); ++i)
        if (!keep[i] && t.monomial[i] != 0)
          return false;
      return true;
    });
    if (only_kept)
      out.push_back(std::move(g));
  }
  return out;
}

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  if (!same_context(a.context(), b.context()))
    throw UsageError("gcd of polynomials from different contexts");
  if (a.is_zero() && b.is_zero())
    throw UsageError("gcd(0, 0) is undefined");
  const auto &ctx = a.context();
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(ctx, 1);

  // <a> ∩ <b> = <t*a, (1-t)*b> ∩ Q[X], and that intersection is <lcm(a,b)>.
  auto names = ctx->names();
  names.push_back(ctx->fresh_name("t"));
  auto ext = make_context(std::move(names));
  const std::size_t d = ctx->size();
  std::vector<std::size_t> id(d);
  for (std::size_t i = 0; i < d; ++i)
    id[i] = i;
  Polynomial t = Polynomial::variable(ext, d);
  Polynomial one = Polynomial::constant(ext, 1);
  Polynomial ea = a.embed(ext, id);
  Polynomial eb = b.embed(ext, id);
  std::vector<bool> keep(d + 1, true);
  keep[d] = false;
  auto inter = eliminate({t * ea, (one - t) * eb}, keep);
  if (inter.size() != 1)
    throw InternalError("ideal intersection of two principal ideals is not principal");

  std::vector<Term> back;
  for (const auto &term : inter[0].terms()) {
    auto e = term.monomial.exponents();
    e.pop_back();
    back.push_back(Term{Monomial(std::move(e)), term.coefficient});
  }
  Polynomial l = Polynomial::canonicalize(ctx, std::move(back));
  return exact_divide(a * b, l).monic();
}

} // namespace leinartas
