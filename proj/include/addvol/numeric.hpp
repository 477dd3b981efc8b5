#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "addvol/error.hpp"

namespace addvol {

// Exact arithmetic everywhere: the extremal generators produce values like
// 2^(c-2)*(k+1-c+b) that leave the machine-word range quickly.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const Int& v) {
  return v.convert_to<std::int64_t>();
}

// Strict integer literal: optional sign, then digits. Returns nullopt instead
// of relying on cpp_int's own (exception-based, position-less) parse failure.
inline std::optional<Int> parse_int(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  return Int(text);
}

// "p/q" or plain integer.
inline std::optional<Rat> parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rat(*v);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rat(*num, *den);
}

inline Int pow2(std::int64_t e) {
  Int r = 1;
  return r << e;
}

inline Int pow_int(Int base, std::int64_t e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace addvol
