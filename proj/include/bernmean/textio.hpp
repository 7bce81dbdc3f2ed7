#ifndef BERNMEAN_TEXTIO_HPP
#define BERNMEAN_TEXTIO_HPP

#include <charconv>
#include <cstdio>
#include <string>

namespace bernmean {

/// Shortest decimal string that round-trips to the same double; the CSV
/// emitters use this so output bytes are stable across platforms.
inline std::string fmt_shortest(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Fixed number of significant digits, trailing zeros kept.
inline std::string fmt_sig(double v, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 17) digits = 17;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.*g", digits, v);
  std::string s = buf;
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace bernmean

#endif  // BERNMEAN_TEXTIO_HPP
