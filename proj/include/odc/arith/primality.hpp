#pragma once

// Primality testing.
//
//   n < 2^64                  deterministic Miller-Rabin, 12 prime bases
//   n < 3317044064679887385961981   deterministic Miller-Rabin, 13 prime bases
//   larger                    Baillie-PSW (strong base-2 + strong Lucas)
//
// The 13-base bound is the published psi_13 limit; BPSW has no known
// counterexample.

#include <array>
#include <cstdint>

#include "odc/arith/bigint.hpp"
#include "odc/arith/montgomery.hpp"

namespace odc {

namespace detail {

inline constexpr std::array<std::uint32_t, 13> kWitnessPrimes = {2,  3,  5,  7,  11, 13, 17,
                                                                 19, 23, 29, 31, 37, 41};

template <class Mont>
bool strong_probable_prime(const Mont& mont, typename Mont::value_type n,
                           typename Mont::value_type base) {
  using U = typename Mont::value_type;
  U d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const U one = mont.one();
  const U minus_one = mont.sub(mont.to(0), one);
  U x = mont.pow(mont.to(base % n), d);
  if (x == one || x == minus_one) return true;
  for (int i = 1; i < s; ++i) {
    x = mont.mul(x, x);
    if (x == minus_one) return true;
    if (x == one) return false;
  }
  return false;
}

inline bool strong_probable_prime_big(const BigInt& n, const BigInt& base) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  BigInt x = boost::multiprecision::powm(BigInt(base % n), d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

inline int jacobi(BigInt a, BigInt n) {
  // n odd positive
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>((n & 7).convert_to<unsigned>());
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline bool is_perfect_square(const BigInt& n) {
  const BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

// Strong Lucas probable prime test with Selfridge parameters (method A).
inline bool strong_lucas_probable_prime(const BigInt& n) {
  if (is_perfect_square(n)) return false;
  BigInt D = 5;
  for (;;) {
    const int j = jacobi(D, n);
    if (j == -1) break;
    if (j == 0 && abs(D) != n) return false;
    D = D > 0 ? BigInt(-(D + 2)) : BigInt(-D + 2);
  }
  const BigInt P = 1;
  const BigInt Q = (1 - D) / 4;
  auto mod = [&n](BigInt v) {
    v %= n;
    if (v < 0) v += n;
    return v;
  };
  auto half = [&n](BigInt v) {  // v / 2 mod n, v in [0, n)
    if (v & 1) v += n;
    return BigInt(v >> 1);
  };
  BigInt d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // binary ladder computing U_d, V_d, Q^d
  BigInt U = 1, V = P, Qk = mod(Q);
  const BigInt Dm = mod(D);
  const unsigned bits = boost::multiprecision::msb(d);
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    U = mod(U * V);
    V = mod(V * V - 2 * Qk);
    Qk = mod(Qk * Qk);
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
      const BigInt U2 = half(mod(P * U + V));
      const BigInt V2 = half(mod(Dm * U + P * V));
      U = U2;
      V = V2;
      Qk = mod(Qk * Q);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk);
    if (V == 0) return true;
    Qk = mod(Qk * Qk);
  }
  return false;
}

}  // namespace detail

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : detail::kWitnessPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 41ull * 41ull) return true;
  const detail::Mont64 mont(n);
  for (std::size_t i = 0; i < 12; ++i) {
    if (!detail::strong_probable_prime(mont, n, std::uint64_t{detail::kWitnessPrimes[i]}))
      return false;
  }
  return true;
}

inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(n.convert_to<std::uint64_t>());
  for (std::uint32_t p : detail::kWitnessPrimes) {
    if (n % p == 0) return false;
  }
  static const BigInt psi13("3317044064679887385961981");
  if (n < psi13) {
    const u128 m = to_u128(n);
    const detail::Mont128 mont(m);
    for (std::uint32_t p : detail::kWitnessPrimes) {
      if (!detail::strong_probable_prime(mont, m, u128{p})) return false;
    }
    return true;
  }
  if (!detail::strong_probable_prime_big(n, 2)) return false;
  return detail::strong_lucas_probable_prime(n);
}

}  // namespace odc
