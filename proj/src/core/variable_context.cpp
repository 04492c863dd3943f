#include "leinartas/variable_context.hpp"

#include "leinartas/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace leinartas {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty())
    throw UsageError("variable context needs at least one variable");
  std::unordered_set<std::string_view> seen;
  for (const auto &n : names_) {
    if (n.empty())
      throw UsageError("variable names must be nonempty");
    if (!seen.insert(n).second)
      throw UsageError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::string VariableContext::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  while (index_of(candidate))
    candidate += '_';
  return candidate;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

bool same_context(const ContextPtr &a, const ContextPtr &b) {
  return a == b || (a && b && *a == *b);
}

} // namespace leinartas
