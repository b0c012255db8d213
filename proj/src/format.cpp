#include "pctrank/format.hpp"

#include <charconv>
#include <cstdio>

namespace pctrank {

std::string format_fixed5(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.5f", value);
  std::string out(buf);
  auto dot = out.find('.');
  if (dot != std::string::npos) {
    auto last = out.find_last_not_of('0');
    out.erase(last == dot ? dot : last + 1);
  }
  if (out == "-0") out = "0";
  return out;
}

std::string format_roundtrip(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace pctrank
