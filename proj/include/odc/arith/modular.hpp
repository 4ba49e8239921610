#pragma once

// Multiplicative orders, r-parts, cyclotomic values and primitive prime
// divisors R_i(n). Negative bases use ordinary signed residues.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "odc/arith/bigint.hpp"
#include "odc/arith/factored_integer.hpp"
#include "odc/arith/factorize.hpp"
#include "odc/arith/primality.hpp"

namespace odc {

namespace detail {

inline void require_prime(const BigInt& r) {
  if (!is_prime(r)) throw std::invalid_argument("not a prime: " + r.str());
}

inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t r) {
  BigInt m = n % r;
  if (m < 0) m += r;
  return m.convert_to<std::uint64_t>();
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// Moebius function of a small positive integer.
inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace detail

/// n_(r): the largest power of the prime r dividing n.
inline BigInt r_part(const BigInt& n, const BigInt& r) {
  if (n <= 0) throw std::domain_error("r_part requires n >= 1");
  detail::require_prime(r);
  BigInt m = n, out = 1;
  while (m % r == 0) {
    m /= r;
    out *= r;
  }
  return out;
}

/// Smallest k >= 1 with n^k = 1 (mod r).
inline BigInt mult_order(const BigInt& n, const BigInt& r) {
  detail::require_prime(r);
  BigInt a = n % r;
  if (a < 0) a += r;
  if (a == 0) throw std::domain_error("mult_order: r divides n");
  BigInt k = r - 1;
  const FactoredInteger group_order = factorize(k);
  for (const auto& f : group_order.factors()) {
    for (unsigned i = 0; i < f.exponent && boost::multiprecision::powm(a, k / f.prime, r) == 1; ++i)
      k /= f.prime;
  }
  return k;
}

inline std::uint64_t mult_order(const BigInt& n, std::uint64_t r) {
  if (!is_prime(r)) throw std::invalid_argument("mult_order: modulus is not prime");
  const std::uint64_t a = detail::mod_u64(n, r);
  if (a == 0) throw std::domain_error("mult_order: r divides n");
  std::uint64_t k = r - 1;
  const FactoredInteger group_order = factorize(BigInt(r - 1));
  for (const auto& f : group_order.factors()) {
    const auto p = f.prime.convert_to<std::uint64_t>();
    for (unsigned i = 0; i < f.exponent && detail::powmod_u64(a, k / p, r) == 1; ++i) k /= p;
  }
  return k;
}

/// Smallest k >= 1 with n^k = -1 (mod r); none when the order is odd.
inline std::optional<std::uint64_t> neg_order(const BigInt& n, std::uint64_t r) {
  const std::uint64_t k = mult_order(n, r);
  if (r == 2) return 1;  // -1 = 1 (mod 2)
  if (k % 2) return std::nullopt;
  return k / 2;
}

/// e(r, n): the multiplicative order of n modulo r, except that e(2, n) is 1
/// when n = 1 (mod 4) and 2 otherwise.
inline std::uint64_t e_of(const BigInt& r, const BigInt& n) {
  if (abs(n) <= 1) throw std::domain_error("e(r, n) requires |n| > 1");
  detail::require_prime(r);
  if (n % r == 0) throw std::domain_error("e(r, n): r divides n");
  if (r == 2) {
    BigInt m = n % 4;
    if (m < 0) m += 4;
    return m == 1 ? 1 : 2;
  }
  if (fits_u64(r)) return mult_order(n, r.convert_to<std::uint64_t>());
  return to_u64(mult_order(n, r));
}

/// The cyclotomic value Phi_i(n), signed.
inline BigInt cyclotomic_value(const BigInt& n, std::uint64_t i) {
  if (i == 0) throw std::domain_error("cyclotomic index must be positive");
  if (abs(n) <= 1) throw std::domain_error("cyclotomic_value requires |n| > 1");
  BigInt num = 1, den = 1;
  for (std::uint64_t d = 1; d <= i; ++d) {
    if (i % d) continue;
    const int mu = detail::moebius(i / d);
    if (mu == 1) num *= ipow(n, d) - 1;
    if (mu == -1) den *= ipow(n, d) - 1;
  }
  if (num % den != 0) throw std::logic_error("cyclotomic quotient not exact");
  return num / den;
}

/// R_i(n): all primes r with e(r, n) = i, ascending.
///
/// Every such r divides Phi_i(n), so the set is read off the factorization of
/// |Phi_i(n)|; the other primes of Phi_i(n) (at most the largest prime of i)
/// are filtered out by their order.
inline std::vector<BigInt> primitive_prime_divisors(const BigInt& n, std::uint64_t i) {
  if (abs(n) <= 1) throw std::domain_error("primitive_prime_divisors requires |n| > 1");
  if (i == 0) throw std::domain_error("primitive_prime_divisors requires i >= 1");
  const BigInt phi = abs(cyclotomic_value(n, i));
  std::vector<BigInt> out;
  if (phi == 0) return out;
  const FactoredInteger phi_f = factorize(phi);
  for (const auto& f : phi_f.factors()) {
    if (n % f.prime == 0) continue;
    if (e_of(f.prime, n) == i) out.push_back(f.prime);
  }
  return out;
}

}  // namespace odc
