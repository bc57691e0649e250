#pragma once

#include <optional>
#include <string>

namespace dcsim {

/// Six significant digits, `%g` style, independent of the global locale.
std::string format_sig6(double value);

/// Shortest text that parses back to exactly `value`.
std::string format_exact(double value);

/// Empty string for nullopt.
std::string format_optional(const std::optional<std::size_t>& value);

}  // namespace dcsim
