#pragma once

#include <cstdint>
#include <string>

namespace pctrank {

// Fixed 5-decimal formatting with trailing zeros (and a trailing dot)
// stripped: 97.560975.. -> "97.56098", 40.5 -> "40.5", 50.0 -> "50".
// Matches the precision percentile tables are usually printed at.
std::string format_fixed5(double value);

// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

}  // namespace pctrank
