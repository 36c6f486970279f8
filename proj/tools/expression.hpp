#pragma once

#include <string_view>

#include "trigsum/double_wide.hpp"

namespace trigsum::cli {

/// Evaluates +, -, *, /, parentheses, decimal literals and the names
/// pi, ln2, gamma. A literal directly followed by a name or '(' multiplies.
/// Throws std::invalid_argument with the offending position.
DoubleWide parse_expression(std::string_view text);

}  // namespace trigsum::cli
