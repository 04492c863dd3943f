#include "leinartas/render.hpp"

#include <sstream>

namespace leinartas {

using nlohmann::json;

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text")
    return OutputFormat::text;
  if (name == "json")
    return OutputFormat::json;
  if (name == "latex")
    return OutputFormat::latex;
  return std::nullopt;
}

namespace {

json certificate_json(const CertificateRecord &rec) {
  return std::visit(
      [](const auto &c) -> json {
        using T = std::decay_t<decltype(c)>;
        json inputs = json::array();
        for (const auto &p : c.inputs)
          inputs.push_back(p.to_string());
        if constexpr (std::is_same_v<T, NullCertificate>) {
          json cof = json::array();
          for (const auto &h : c.cofactors)
            cof.push_back(h.to_string());
          return {{"kind", "nullstellensatz"}, {"inputs", inputs}, {"cofactors", cof}};
        } else {
          return {{"kind", "annihilator"},
                  {"inputs", inputs},
                  {"variables", c.y_context->names()},
                  {"polynomial", c.poly.to_string()}};
        }
      },
      rec);
}

json report_json(const VerificationReport &r) {
  json terms = json::array();
  for (const auto &t : r.terms)
    terms.push_back({{"common_zero_ok", t.common_zero_ok},
                     {"independence_ok", t.independence_ok},
                     {"size_ok", t.size_ok}});
  return {{"sum_ok", r.sum_ok}, {"terms", terms}, {"overall", r.overall}};
}

std::string paren(const std::string &s) { return "(" + s + ")"; }

std::string text_term(const DecompositionTerm &t, const FactoredDenominator &q) {
  std::string out = paren(t.numerator.to_string()) + " / [";
  if (t.denominator.empty())
    out += "1";
  for (std::size_t k = 0; k < t.denominator.size(); ++k) {
    if (k > 0)
      out += " * ";
    const auto &part = t.denominator[k];
    out += paren(q.factors[part.index].factor.to_string()) + "^" + std::to_string(part.exponent);
  }
  return out + "]";
}

std::string latex_factor(const Polynomial &f, std::uint32_t e, bool alone) {
  std::string base = to_latex(f);
  if ((f.size() > 1 && (e > 1 || !alone)) || (e > 1 && f.terms()[0].coefficient != 1))
    base = "\\left(" + base + "\\right)";
  if (e > 1)
    base += "^{" + std::to_string(e) + "}";
  return base;
}

std::string latex_term(const DecompositionTerm &t, const FactoredDenominator &q) {
  if (t.denominator.empty())
    return to_latex(t.numerator);
  std::string den;
  for (const auto &part : t.denominator) {
    if (!den.empty())
      den += " ";
    den += latex_factor(q.factors[part.index].factor, part.exponent, t.denominator.size() == 1);
  }
  return "\\frac{" + to_latex(t.numerator) + "}{" + den + "}";
}

} // namespace

std::string to_latex(const Polynomial &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : p.terms()) {
    bool negative = sgn(t.coefficient) < 0;
    Rational mag = abs(t.coefficient);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
      auto e = t.monomial[i];
      if (e == 0)
        continue;
      if (!mono.empty())
        mono += ' ';
      mono += p.context()->name(i);
      if (e > 1)
        mono += "^{" + std::to_string(e) + "}";
    }
    std::string coef;
    if (mag.get_den() == 1)
      coef = mag.get_num().get_str();
    else
      coef = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    if (mono.empty())
      os << coef;
    else if (mag == 1)
      os << mono;
    else
      os << coef << ' ' << mono;
  }
  return os.str();
}

json to_json(const Decomposition &dec, const VerificationReport *report,
             bool include_certificates) {
  const auto &ctx = dec.original.numerator.context();
  json terms = json::array();
  for (const auto &t : dec.terms) {
    json den = json::array();
    for (const auto &part : t.denominator)
      den.push_back({{"factor", dec.denominator.factors[part.index].factor.to_string()},
                     {"exponent", part.exponent}});
    terms.push_back({{"numerator", t.numerator.to_string()}, {"denominator", den}});
  }
  json doc = {
      {"variables", ctx->names()},
      {"input",
       {{"numerator", dec.original.numerator.to_string()},
        {"denominator", dec.original.denominator.to_string()}}},
      {"terms", terms},
  };
  if (include_certificates) {
    json certs = json::array();
    for (const auto &rec : dec.log)
      certs.push_back(certificate_json(rec));
    doc["certificates"] = certs;
  }
  if (report)
    doc["verification"] = report_json(*report);
  return doc;
}

OutputDocument render(const Decomposition &dec, const VerificationReport *report,
                      OutputFormat format, bool include_certificates) {
  std::ostringstream os;
  switch (format) {
  case OutputFormat::json:
    os << to_json(dec, report, include_certificates).dump(2) << '\n';
    break;
  case OutputFormat::text: {
    os << "f = " << paren(dec.original.numerator.to_string()) << " / "
       << paren(dec.original.denominator.to_string()) << '\n';
    for (const auto &t : dec.terms)
      os << text_term(t, dec.denominator) << '\n';
    if (include_certificates)
      for (const auto &rec : dec.log)
        os << "certificate " << certificate_json(rec).dump() << '\n';
    if (report) {
      os << "verification: sum_ok=" << (report->sum_ok ? "true" : "false")
         << " overall=" << (report->overall ? "true" : "false") << '\n';
      for (std::size_t k = 0; k < report->terms.size(); ++k) {
        const auto &t = report->terms[k];
        os << "  term " << k + 1 << ": common_zero=" << (t.common_zero_ok ? "ok" : "FAIL")
           << " independent=" << (t.independence_ok ? "ok" : "FAIL")
           << " size=" << (t.size_ok ? "ok" : "FAIL") << '\n';
      }
    }
    break;
  }
  case OutputFormat::latex: {
    os << "\\frac{" << to_latex(dec.original.numerator) << "}{"
       << to_latex(dec.original.denominator) << "} = ";
    if (dec.terms.empty())
      os << "0";
    for (std::size_t k = 0; k < dec.terms.size(); ++k) {
      if (k > 0)
        os << " + ";
      os << latex_term(dec.terms[k], dec.denominator);
    }
    os << '\n';
    if (report)
      os << "% verification: " << (report->overall ? "passed" : "FAILED") << '\n';
    break;
  }
  }
  return OutputDocument{format, os.str()};
}

} // namespace leinartas
