#pragma once

#include "leinartas/decompose.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace leinartas {

enum class OutputFormat { text, json, latex };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct OutputDocument {
  OutputFormat format;
  std::string payload;
};

/// JSON form of a decomposition. Every polynomial is written in canonical
/// text form, so it parses back to the identical Polynomial.
nlohmann::json to_json(const Decomposition &dec, const VerificationReport *report,
                       bool include_certificates);

OutputDocument render(const Decomposition &dec, const VerificationReport *report,
                      OutputFormat format, bool include_certificates = false);

/// LaTeX for a single polynomial, e.g. "\frac{3}{2} X^{2} Y - 1".
std::string to_latex(const Polynomial &p);

} // namespace leinartas
