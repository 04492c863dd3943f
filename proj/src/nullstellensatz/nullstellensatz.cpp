#include "leinartas/nullstellensatz.hpp"

#include "leinartas/errors.hpp"
#include "leinartas/groebner.hpp"

namespace leinartas {

namespace {

void check_inputs(const std::vector<Polynomial> &polys) {
  if (polys.empty())
    throw UsageError("common-zero test needs at least one polynomial");
  for (const auto &p : polys) {
    if (!same_context(p.context(), polys[0].context()))
      throw UsageError("polynomials belong to different variable contexts");
    if (p.is_zero())
      throw UsageError("zero polynomial in common-zero test");
  }
}

} // namespace

bool NullCertificate::verify() const {
  if (inputs.empty() || inputs.size() != cofactors.size())
    return false;
  Polynomial sum(inputs[0].context());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    sum += cofactors[i] * inputs[i];
  return sum.is_one();
}

bool has_common_zero(const std::vector<Polynomial> &polys) {
  check_inputs(polys);
  return !ideal_contains_one(polys);
}

std::optional<NullCertificate> find_certificate(const std::vector<Polynomial> &polys) {
  check_inputs(polys);
  auto gb = buchberger(polys, MonomialOrder::degrevlex(), true);
  if (!gb.is_unit_ideal())
    return std::nullopt;
  NullCertificate cert{polys, std::move(gb.representation.front())};
  if (!cert.verify())
    throw InternalError("tracked cofactors do not reproduce 1");
  return cert;
}

NullCertificate certificate(const std::vector<Polynomial> &polys) {
  auto cert = find_certificate(polys);
  if (!cert)
    throw DomainError("no Nullstellensatz certificate: the polynomials have a common zero "
                      "(1 is not in the ideal they generate)");
  return std::move(*cert);
}

} // namespace leinartas
