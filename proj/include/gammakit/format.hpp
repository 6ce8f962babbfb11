#pragma once

#include <charconv>
#include <string>

namespace gammakit {

/// Shortest decimal text that reads back to the same double. Independent of
/// the global locale.
inline std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  if (value == 0.0) return "0";
  return std::string(buf, ptr);
}

}  // namespace gammakit
