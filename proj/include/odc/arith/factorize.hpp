#pragma once

// Complete factorization: trial division by primes below 10^6, then
// Pollard-Brent rho on the cofactor (64-bit, 128-bit or cpp_int arithmetic
// depending on size) with primality certified at every leaf.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "odc/arith/bigint.hpp"
#include "odc/arith/factored_integer.hpp"
#include "odc/arith/montgomery.hpp"
#include "odc/arith/primality.hpp"

namespace odc {

inline constexpr std::uint32_t kTrialBound = 1'000'000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

namespace detail {

using FactorMap = std::map<BigInt, unsigned>;

// Strips primes below kTrialBound from n. Three primes at a time share one
// big modulus; the small remainder is then tested per prime.
inline void trial_divide(BigInt& n, FactorMap& out) {
  const auto& ps = small_primes();
  auto strip = [&](std::uint32_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out[BigInt(p)] += e;
  };
  std::size_t i = 0;
  for (; i + 2 < ps.size(); i += 3) {
    const std::uint64_t p0 = ps[i];
    if (BigInt(p0) * p0 > n) break;
    const std::uint64_t prod = p0 * ps[i + 1] * ps[i + 2];
    const auto r = static_cast<std::uint64_t>(n % prod);
    if (r % ps[i] == 0) strip(ps[i]);
    if (r % ps[i + 1] == 0) strip(ps[i + 1]);
    if (r % ps[i + 2] == 0) strip(ps[i + 2]);
  }
  for (; i < ps.size(); ++i) {
    if (BigInt(ps[i]) * ps[i] > n) break;
    strip(ps[i]);
  }
}

template <class Mont>
typename Mont::value_type brent_rho(typename Mont::value_type n, typename Mont::value_type c0) {
  using U = typename Mont::value_type;
  const Mont mont(n);
  const U c = mont.to(c0);
  auto f = [&](U x) { return mont.add(mont.mul(x, x), c); };
  constexpr std::uint64_t kBlock = 128;
  U y = mont.to(2), x = y, ys = y, q = mont.one();
  U g = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBlock) {
      ys = y;
      const std::uint64_t lim = std::min(kBlock, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = mont.mul(q, x > y ? x - y : y - x);
      }
      g = binary_gcd<U>(mont.from(q), n);
    }
  }
  if (g == n) {
    // the block overshot; walk back one step at a time
    do {
      ys = f(ys);
      g = binary_gcd<U>(mont.from(x > ys ? x - ys : ys - x), n);
    } while (g == 1);
  }
  return g;
}

inline BigInt brent_rho_big(const BigInt& n, const BigInt& c) {
  auto f = [&](const BigInt& x) { return BigInt((x * x + c) % n); };
  constexpr std::uint64_t kBlock = 128;
  BigInt y = 2, x = y, ys = y, q = 1, g = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBlock) {
      ys = y;
      const std::uint64_t lim = std::min(kBlock, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = (q * abs(BigInt(x - y))) % n;
      }
      g = boost::multiprecision::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = boost::multiprecision::gcd(BigInt(abs(BigInt(x - ys))), n);
    } while (g == 1);
  }
  return g;
}

// A nontrivial divisor of the odd composite n.
inline BigInt find_divisor(const BigInt& n) {
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) return root;
  for (std::uint64_t c = 1;; ++c) {
    BigInt g;
    if (fits_u64(n)) {
      g = brent_rho<Mont64>(n.convert_to<std::uint64_t>(), c);
    } else if (boost::multiprecision::msb(n) < 127) {
      g = from_u128(brent_rho<Mont128>(to_u128(n), c));
    } else {
      g = brent_rho_big(n, c);
    }
    if (g != 1 && g != n) return g;
  }
}

inline void factor_cofactor(const BigInt& n, FactorMap& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  const BigInt d = find_divisor(n);
  factor_cofactor(d, out);
  factor_cofactor(n / d, out);
}

}  // namespace detail

/// Complete factorization of n >= 1.
inline FactoredInteger factorize(const BigInt& n) {
  if (n <= 0) throw std::domain_error("factorize requires a positive integer, got " + n.str());
  BigInt m = n;
  detail::FactorMap fm;
  detail::trial_divide(m, fm);
  detail::factor_cofactor(m, fm);
  std::vector<PrimePower> fs;
  fs.reserve(fm.size());
  for (auto& [p, e] : fm) fs.push_back({p, e});
  return FactoredInteger::from_factors(std::move(fs));
}

inline FactoredInteger factorize(std::uint64_t n) { return factorize(BigInt(n)); }

}  // namespace odc
