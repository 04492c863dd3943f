#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leinartas {

/// Ordered list of distinct variable names X_1, ..., X_d. Every polynomial
/// carries exponent vectors of exactly d entries, in this order.
class VariableContext {
public:
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// A name not present in this context, derived from `stem`.
  std::string fresh_name(std::string_view stem) const;

  friend bool operator==(const VariableContext &, const VariableContext &) = default;

private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);

/// True when both contexts declare the same variables in the same order.
bool same_context(const ContextPtr &a, const ContextPtr &b);

} // namespace leinartas
