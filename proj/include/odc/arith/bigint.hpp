#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace odc {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && boost::multiprecision::msb(v | 1) < 64;
}

inline bool fits_u128(const BigInt& v) {
  return v >= 0 && boost::multiprecision::msb(v | 1) < 128;
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

inline u128 to_u128(const BigInt& v) {
  if (!fits_u128(v)) throw std::overflow_error("integer does not fit in 128 bits: " + v.str());
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>((v & mask).convert_to<std::uint64_t>());
  const auto hi = static_cast<std::uint64_t>((v >> 64).convert_to<std::uint64_t>());
  return (static_cast<u128>(hi) << 64) | lo;
}

inline BigInt from_u128(u128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    exp >>= 1;
    if (exp) base *= base;
  }
  return r;
}

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace odc
