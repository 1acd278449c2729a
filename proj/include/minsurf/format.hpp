#pragma once

#include <string>
#include <string_view>

namespace minsurf {

/// Shortest-safe decimal for round-tripping: 17 significant digits.
std::string format_real(double x);

/// Strict inverse of format_real; throws Error(BadParameter) on junk.
double parse_real(std::string_view text);

} // namespace minsurf
