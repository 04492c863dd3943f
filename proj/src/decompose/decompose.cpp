#include "leinartas/decompose.hpp"

#include "leinartas/errors.hpp"
#include "leinartas/groebner.hpp"

#include <algorithm>
#include <map>

namespace leinartas {

namespace {

using IndexSet = std::vector<std::size_t>;
using DenKey = std::vector<DenominatorPart>;

void accumulate(std::map<DenKey, Polynomial> &acc, const DenKey &key, const Polynomial &num) {
  if (num.is_zero())
    return;
  auto it = acc.find(key);
  if (it == acc.end())
    acc.emplace(key, num);
  else
    it->second += num;
}

std::vector<DecompositionTerm> to_terms(std::map<DenKey, Polynomial> acc) {
  std::vector<DecompositionTerm> out;
  for (auto &[key, num] : acc)
    if (!num.is_zero())
      out.push_back(DecompositionTerm{std::move(num), key});
  return out;
}

std::vector<Polynomial> powered(const FactoredDenominator &q, const DenKey &den) {
  std::vector<Polynomial> out;
  for (const auto &part : den)
    out.push_back(q.factors.at(part.index).factor.pow(part.exponent));
  return out;
}

std::vector<Polynomial> bases(const FactoredDenominator &q, const DenKey &den) {
  std::vector<Polynomial> out;
  for (const auto &part : den)
    out.push_back(q.factors.at(part.index).factor);
  return out;
}

IndexSet indices(const DenKey &den) {
  IndexSet out;
  for (const auto &part : den)
    out.push_back(part.index);
  return out;
}

std::uint64_t norm(const Monomial &m) { return m.degree(); }

// Minimal-norm support element; ties go to the lexicographically smallest
// exponent vector.
const Monomial &choose_alpha(const std::vector<Monomial> &support) {
  const Monomial *best = &support.front();
  for (const auto &nu : support) {
    if (norm(nu) < norm(*best) || (norm(nu) == norm(*best) && lex_compare(nu, *best) < 0))
      best = &nu;
  }
  return *best;
}

} // namespace

std::vector<DecompositionTerm> null_decompose(const Polynomial &p, const FactoredDenominator &q,
                                              std::vector<CertificateRecord> *log) {
  if (sgn(q.unit) == 0)
    throw UsageError("factored denominator has a zero unit");
  DenKey all;
  for (std::size_t i = 0; i < q.size(); ++i)
    all.push_back({i, q.factors[i].exponent});

  std::map<DenKey, Polynomial> current;
  accumulate(current, all, Rational(1) / q.unit * p);
  std::map<DenKey, Polynomial> done;
  std::map<IndexSet, std::optional<NullCertificate>> certs;

  while (!current.empty()) {
    std::map<DenKey, Polynomial> next;
    for (const auto &[den, num] : current) {
      if (den.empty()) {
        accumulate(done, den, num);
        continue;
      }
      auto key = indices(den);
      auto it = certs.find(key);
      if (it == certs.end()) {
        it = certs.emplace(key, find_certificate(powered(q, den))).first;
        if (it->second && log)
          log->push_back(*it->second);
      }
      if (!it->second) {
        accumulate(done, den, num);
        continue;
      }
      // p/prod = sum_i p*h_i / prod_{j != i}, since sum_i h_i q_i^{e_i} = 1.
      const auto &cofactors = it->second->cofactors;
      for (std::size_t k = 0; k < den.size(); ++k) {
        if (cofactors[k].is_zero())
          continue;
        DenKey rest = den;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        accumulate(next, rest, num * cofactors[k]);
      }
    }
    current = std::move(next);
  }
  return to_terms(std::move(done));
}

std::vector<DecompositionTerm> algdep_decompose(const DecompositionTerm &term,
                                                const FactoredDenominator &q,
                                                std::vector<CertificateRecord> *log) {
  std::map<DenKey, Polynomial> current;
  accumulate(current, term.denominator, term.numerator);
  std::map<DenKey, Polynomial> done;
  std::map<IndexSet, bool> independent;
  std::map<DenKey, Annihilator> annihilators;

  while (!current.empty()) {
    std::map<DenKey, Polynomial> next;
    for (const auto &[den, num] : current) {
      if (den.empty()) {
        accumulate(done, den, num);
        continue;
      }
      auto key = indices(den);
      auto ind = independent.find(key);
      if (ind == independent.end())
        ind = independent.emplace(key, is_algebraically_independent(bases(q, den))).first;
      if (ind->second) {
        accumulate(done, den, num);
        continue;
      }

      auto ann = annihilators.find(den);
      if (ann == annihilators.end()) {
        ann = annihilators.emplace(den, annihilating_polynomial(powered(q, den))).first;
        if (log)
          log->push_back(ann->second);
      }
      const Annihilator &g = ann->second;
      const Monomial &alpha = choose_alpha(g.support);
      Rational c_alpha;
      for (const auto &t : g.poly.terms())
        if (t.monomial == alpha)
          c_alpha = t.coefficient;

      // With Q = (q_i^{b_i}) and g(Q) = 0:
      //   p/Q^1 = sum_{nu != alpha} (-c_nu/c_alpha) p Q^nu / Q^{alpha+1}.
      for (const auto &t : g.poly.terms()) {
        const Monomial &nu = t.monomial;
        if (nu == alpha)
          continue;
        if (norm(nu) < norm(alpha))
          throw InternalError("chosen multi-index does not have minimal norm");
        bool cancels = false;
        for (std::size_t k = 0; k < den.size(); ++k)
          cancels = cancels || nu[k] >= alpha[k] + 1;
        if (!cancels)
          throw InternalError("no denominator factor cancels for a support element");

        Polynomial new_num = Rational(-t.coefficient / c_alpha) * num;
        DenKey new_den;
        for (std::size_t k = 0; k < den.size(); ++k) {
          const auto &part = den[k];
          std::uint64_t below = std::uint64_t{part.exponent} * (alpha[k] + 1);
          std::uint64_t above = std::uint64_t{part.exponent} * nu[k];
          if (above >= below) {
            if (above > below)
              new_num = new_num * q.factors[part.index].factor.pow(above - below);
          } else {
            new_den.push_back({part.index, static_cast<std::uint32_t>(below - above)});
          }
        }
        accumulate(next, new_den, new_num);
      }
    }
    current = std::move(next);
  }
  return to_terms(std::move(done));
}

Decomposition leinartas_decompose(const RationalExpression &f,
                                  const std::optional<std::vector<FactorPower>> &factors) {
  const auto &ctx = f.numerator.context();
  if (f.denominator.is_zero())
    throw DomainError("zero denominator");

  FactoredDenominator q;
  if (factors) {
    Polynomial product = Polynomial::constant(ctx, 1);
    for (const auto &fp : *factors) {
      if (!same_context(fp.factor.context(), ctx))
        throw UsageError("supplied factor belongs to a different variable context");
      if (fp.factor.is_zero())
        throw DomainError("supplied factor is zero");
      product = product * fp.factor.pow(fp.exponent);
    }
    Rational scale = f.denominator.leading_coefficient() / product.leading_coefficient();
    if (!(f.denominator == scale * product))
      throw DomainError("product of the supplied factors (" + product.to_string() +
                        ") does not match the denominator (" + f.denominator.to_string() + ")");
    q = coprime_refine(*factors);
    q.unit *= scale;
  } else {
    q = coprime_refine({FactorPower{f.denominator, 1}});
  }
  if (!(q.expand(ctx) == f.denominator))
    throw InternalError("refined denominator does not expand to the input denominator");

  Decomposition dec{f, q, {}, {}};
  std::map<DenKey, Polynomial> merged;
  for (const auto &t1 : null_decompose(f.numerator, q, &dec.log))
    for (auto &t2 : algdep_decompose(t1, q, &dec.log))
      accumulate(merged, t2.denominator, t2.numerator);
  dec.terms = to_terms(std::move(merged));
  return dec;
}

Decomposition normalize(const Decomposition &dec) {
  const auto &ctx = dec.original.numerator.context();
  std::map<DenKey, Polynomial> merged;
  for (const auto &t : dec.terms)
    accumulate(merged, t.denominator, t.numerator);
  std::map<DenKey, Polynomial> out;
  Polynomial poly_part(ctx);
  for (auto &[den, num] : merged) {
    if (den.empty()) {
      poly_part += num;
      continue;
    }
    Polynomial d = Polynomial::constant(ctx, 1);
    for (const auto &part : den)
      d = d * dec.denominator.factors.at(part.index).factor.pow(part.exponent);
    auto qr = divide(num, {d});
    poly_part += qr.quotients[0];
    accumulate(out, den, qr.remainder);
  }
  accumulate(out, {}, poly_part);
  Decomposition result{dec.original, dec.denominator, to_terms(std::move(out)), dec.log};
  return result;
}

namespace {

bool well_formed(const DecompositionTerm &t, const FactoredDenominator &q) {
  for (std::size_t k = 0; k < t.denominator.size(); ++k) {
    const auto &part = t.denominator[k];
    if (part.index >= q.size() || part.exponent == 0)
      return false;
    if (k > 0 && t.denominator[k - 1].index >= part.index)
      return false;
  }
  return true;
}

} // namespace

RationalExpression recombine(const Decomposition &dec) {
  const auto &ctx = dec.original.numerator.context();
  const auto &q = dec.denominator;
  std::vector<std::uint32_t> top(q.size(), 0);
  for (const auto &t : dec.terms) {
    if (!well_formed(t, q))
      throw UsageError("malformed decomposition term");
    for (const auto &part : t.denominator)
      top[part.index] = std::max(top[part.index], part.exponent);
  }
  Polynomial den = Polynomial::constant(ctx, 1);
  for (std::size_t i = 0; i < q.size(); ++i)
    den = den * q.factors[i].factor.pow(top[i]);
  Polynomial num(ctx);
  for (const auto &t : dec.terms) {
    std::vector<std::uint32_t> have(q.size(), 0);
    for (const auto &part : t.denominator)
      have[part.index] = part.exponent;
    Polynomial scaled = t.numerator;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (top[i] > have[i])
        scaled = scaled * q.factors[i].factor.pow(top[i] - have[i]);
    num += scaled;
  }
  return RationalExpression(std::move(num), std::move(den));
}

bool recombines(const Decomposition &dec) {
  for (const auto &t : dec.terms)
    if (!well_formed(t, dec.denominator))
      return false;
  return recombine(dec).equivalent(dec.original);
}

VerificationReport verify(const Decomposition &dec) {
  VerificationReport report;
  report.sum_ok = recombines(dec);
  const std::size_t d = dec.original.numerator.num_vars();
  bool all = report.sum_ok;
  for (const auto &t : dec.terms) {
    TermReport tr;
    if (!well_formed(t, dec.denominator)) {
      tr = TermReport{false, false, false};
    } else if (!t.denominator.empty()) {
      auto factors = bases(dec.denominator, t.denominator);
      if (std::any_of(factors.begin(), factors.end(),
                      [](const Polynomial &f) { return f.is_constant(); })) {
        // Only hand-built decompositions can get here.
        tr = TermReport{false, false, false};
      } else {
        tr.common_zero_ok = has_common_zero(powered(dec.denominator, t.denominator));
        tr.independence_ok = is_algebraically_independent(factors);
        tr.size_ok = t.denominator.size() <= d;
      }
    }
    all = all && tr.ok();
    report.terms.push_back(tr);
  }
  report.overall = all;
  return report;
}

bool replay_log(const Decomposition &dec) {
  return std::all_of(dec.log.begin(), dec.log.end(), [](const CertificateRecord &r) {
    return std::visit([](const auto &c) { return c.verify(); }, r);
  });
}

} // namespace leinartas
