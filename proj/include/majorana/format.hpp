#pragma once

#include <charconv>
#include <string>

namespace majorana {

/// Locale-independent decimal text with 17 significant digits.
inline std::string to_text(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace majorana
