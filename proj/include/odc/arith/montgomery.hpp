#pragma once

// Montgomery multiplication for odd moduli below 2^64 and 2^128. Values held
// in Montgomery form are plain integers in [0, n); R = 2^64 or 2^128.

#include <cstdint>

#include "odc/arith/bigint.hpp"

namespace odc::detail {

class Mont64 {
 public:
  using value_type = std::uint64_t;

  explicit Mont64(std::uint64_t n) : n_(n) {
    std::uint64_t x = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 5; ++i) x *= 2 - n * x;
    ninv_ = x;
    const std::uint64_t r = (0 - n) % n;  // 2^64 mod n
    r2_ = static_cast<std::uint64_t>(static_cast<u128>(r) * r % n);
  }

  std::uint64_t modulus() const { return n_; }

  std::uint64_t reduce(u128 t) const {
    const auto lo = static_cast<std::uint64_t>(t);
    const auto hi = static_cast<std::uint64_t>(t >> 64);
    const std::uint64_t m = lo * ninv_;
    const auto mn_hi = static_cast<std::uint64_t>((static_cast<u128>(m) * n_) >> 64);
    return hi >= mn_hi ? hi - mn_hi : hi - mn_hi + n_;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<u128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a - b + n_;
  }
  std::uint64_t to(std::uint64_t a) const { return mul(a % n_, r2_); }
  std::uint64_t from(std::uint64_t a) const { return reduce(a); }
  std::uint64_t one() const { return to(1); }

  std::uint64_t pow(std::uint64_t base_m, std::uint64_t e) const {
    std::uint64_t r = one();
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }

 private:
  std::uint64_t n_, ninv_, r2_;
};

inline void mul_wide(u128 a, u128 b, u128& hi, u128& lo) {
  const auto a0 = static_cast<std::uint64_t>(a), a1 = static_cast<std::uint64_t>(a >> 64);
  const auto b0 = static_cast<std::uint64_t>(b), b1 = static_cast<std::uint64_t>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) + static_cast<std::uint64_t>(p10);
  lo = (mid << 64) | static_cast<std::uint64_t>(p00);
  hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
}

class Mont128 {
 public:
  using value_type = u128;

  explicit Mont128(u128 n) : n_(n) {
    u128 x = n;
    for (int i = 0; i < 6; ++i) x *= 2 - n * x;
    ninv_ = x;
    u128 r = (static_cast<u128>(0) - n) % n;  // 2^128 mod n
    // r2 = r * 2^128 mod n by repeated doubling
    for (int i = 0; i < 128; ++i) r = dbl(r);
    r2_ = r;
  }

  u128 modulus() const { return n_; }

  u128 reduce(u128 hi, u128 lo) const {
    const u128 m = lo * ninv_;
    u128 mn_hi, mn_lo;
    mul_wide(m, n_, mn_hi, mn_lo);
    return hi >= mn_hi ? hi - mn_hi : hi - mn_hi + n_;
  }

  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    mul_wide(a, b, hi, lo);
    return reduce(hi, lo);
  }
  u128 add(u128 a, u128 b) const {
    const u128 s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a - b + n_; }
  u128 to(u128 a) const { return mul(a % n_, r2_); }
  u128 from(u128 a) const { return reduce(0, a); }
  u128 one() const { return to(1); }

  u128 pow(u128 base_m, u128 e) const {
    u128 r = one();
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }

 private:
  u128 dbl(u128 a) const { return add(a, a); }

  u128 n_, ninv_, r2_;
};

template <class U>
U binary_gcd(U a, U b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

}  // namespace odc::detail
