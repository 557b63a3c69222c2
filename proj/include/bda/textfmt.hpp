#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bda::text {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Fixed-point with the given number of decimals.
std::string format_fixed(double v, int decimals);

/// Splits on a single-character delimiter; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char delim);

/// Parses a whole string as a double; false on trailing garbage.
bool parse_double(std::string_view s, double& out);

}  // namespace bda::text
