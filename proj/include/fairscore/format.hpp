#pragma once

#include <string>
#include <string_view>

namespace fairscore {

/// Shortest decimal form that parses back to the same double (to_chars).
std::string double_repr(double value);

/// Fixed-point with the given number of decimals, for headline output.
std::string fixed_repr(double value, int decimals);

/// FNV-1a 64-bit over raw bytes, lowercase hex.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace fairscore
