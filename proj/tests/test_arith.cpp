#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>
#include <utility>

#include "odc/arith.hpp"

using odc::BigInt;
using odc::FactoredInteger;

namespace {

// Independent oracle: naive trial division over all integers.
std::vector<std::pair<std::uint64_t, unsigned>> naive_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt recompose(const FactoredInteger& f) {
  BigInt v = 1;
  for (const auto& pp : f.factors()) v *= odc::ipow(pp.prime, pp.exponent);
  return v;
}

std::uint64_t naive_order(std::int64_t n, std::uint64_t r) {
  std::int64_t a = ((n % static_cast<std::int64_t>(r)) + r) % r;
  std::uint64_t x = a;
  for (std::uint64_t k = 1;; ++k) {
    if (x == 1) return k;
    x = x * a % r;
  }
}

}  // namespace

TEST(Factorize, TrivialAndSmall) {
  EXPECT_TRUE(odc::factorize(1).is_one());
  EXPECT_EQ(odc::factorize(1).to_string(), "1");
  EXPECT_EQ(odc::factorize(12).to_string(), "2^2*3");
  EXPECT_EQ(odc::factorize(1201).to_string(), "1201");
  EXPECT_THROW(odc::factorize(BigInt(0)), std::domain_error);
  EXPECT_THROW(odc::factorize(BigInt(-6)), std::domain_error);
}

TEST(Factorize, AgreesWithNaiveTrialDivision) {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto f = odc::factorize(n);
    const auto want = naive_factor(n);
    ASSERT_EQ(f.factors().size(), want.size()) << n;
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(f.factors()[i].prime, want[i].first);
      EXPECT_EQ(f.factors()[i].exponent, want[i].second);
    }
  }
}

TEST(Factorize, LargePrimeProducts) {
  // two primes above the trial bound force the rho path
  const BigInt p1("1000000007"), p2("998244353"), p3("18446744073709551557");
  EXPECT_EQ(odc::factorize(p1 * p2).to_string(), "998244353*1000000007");
  EXPECT_EQ(odc::factorize(p1 * p1 * p3).to_string(), "1000000007^2*18446744073709551557");
  const BigInt m31 = (BigInt(1) << 31) - 1;
  const BigInt m89 = (BigInt(1) << 89) - 1;
  const BigInt m127 = (BigInt(1) << 127) - 1;
  EXPECT_EQ(odc::factorize(m31 * m89).factors().size(), 2u);
  EXPECT_EQ(odc::factorize(m31 * m127).factors().size(), 2u);
  EXPECT_TRUE(odc::is_prime(m89));
}

TEST(Factorize, RandomRoundTrip) {
  // Uniform u64 values, plus products of up to four random 32-bit values
  // (reaching 128 bits without needing two 64-bit prime factors).
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 10000; ++i) {
    BigInt n;
    if (i % 2 == 0) {
      n = rng() | 1u;
    } else {
      n = 1;
      const int parts = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < parts; ++j) n *= (rng() >> 32) | 1u;
    }
    const auto f = odc::factorize(n);
    ASSERT_EQ(recompose(f), n);
    ASSERT_EQ(f.value(), n);
    for (const auto& pp : f.factors()) ASSERT_TRUE(odc::is_prime(pp.prime));
  }
}

TEST(Primality, AgreesWithNaive) {
  for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(odc::is_prime(n), naive_prime(n)) << n;
}

TEST(Primality, StrongPseudoprimesRejected) {
  // strong pseudoprimes to several small bases
  for (const char* s : {"3215031751", "2152302898747", "3474749660383", "341550071728321",
                        "3825123056546413051", "318665857834031151167461",
                        "3317044064679887385961981"}) {
    EXPECT_FALSE(odc::is_prime(BigInt(s))) << s;
  }
  EXPECT_TRUE(odc::is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127-1
  EXPECT_TRUE(odc::is_prime((BigInt(1) << 107) - 1));
  EXPECT_FALSE(odc::is_prime((BigInt(1) << 101) - 1));
  EXPECT_FALSE(odc::is_prime(BigInt("170141183460469231731687303715884105727") *
                             BigInt("1000000007")));
}

TEST(Primality, LucasPathAgreesOnRange) {
  // above the 13-base bound every answer comes from BPSW
  const BigInt base("3317044064679887385961981");
  int primes = 0;
  for (int k = 0; k < 2000; ++k) {
    const BigInt n = base + k;
    bool composite = false;
    for (std::uint32_t p : odc::small_primes()) {
      if (p > 2000) break;
      if (n % p == 0) composite = true;
    }
    if (composite) {
      ASSERT_FALSE(odc::is_prime(n));
      continue;
    }
    if (odc::is_prime(n)) {
      ++primes;
      // Fermat to several bases as a weak independent check
      for (int b : {2, 3, 5, 7, 11})
        EXPECT_EQ(boost::multiprecision::powm(BigInt(b), n - 1, n), 1);
    }
  }
  EXPECT_GT(primes, 10);
}

TEST(FactoredIntegerT, Invariants) {
  EXPECT_THROW(FactoredInteger::from_factors({{3, 1}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(FactoredInteger::from_factors({{4, 1}}), std::invalid_argument);
  EXPECT_THROW(FactoredInteger::from_factors({{2, 0}}), std::invalid_argument);
  const auto a = FactoredInteger::parse("2^6*3^4*5");
  EXPECT_EQ(a.value(), 25920);
  EXPECT_EQ(FactoredInteger::parse("5*2^3*2").to_string(), "2^4*5");
  const auto b = odc::factorize(360);
  EXPECT_EQ(lcm(a, b).to_string(), "2^6*3^4*5");
  EXPECT_EQ(gcd(a, b).to_string(), "2^3*3^2*5");
  EXPECT_EQ((a * b).value(), BigInt(25920) * 360);
  EXPECT_EQ(a.divide_exact(b).value(), 72);
  EXPECT_THROW(b.divide_exact(a), std::domain_error);
  EXPECT_EQ(a.part(2), 64);
  EXPECT_EQ(a.part(7), 1);
  EXPECT_TRUE(b.divides(a));
}

TEST(PrimeSet, Examples) {
  EXPECT_TRUE(odc::prime_set(odc::factorize(1)).empty());
  EXPECT_EQ(odc::prime_set(odc::factorize(12)), (std::vector<BigInt>{2, 3}));
}

TEST(RPart, Examples) {
  EXPECT_EQ(odc::r_part(48, 2), 16);
  EXPECT_EQ(odc::r_part(9, 3), 9);  // (q+1)_(3) for q = 8
  EXPECT_EQ(odc::r_part(7, 5), 1);
  EXPECT_THROW(odc::r_part(7, 4), std::invalid_argument);
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(odc::mult_order(2, 1201), 300u);
  EXPECT_EQ(odc::mult_order(7, 1201), 8u);
  EXPECT_EQ(odc::neg_order(2, 1201), 150u);
  EXPECT_EQ(odc::neg_order(7, 1201), 4u);
  EXPECT_EQ(odc::neg_order(2, 7), std::nullopt);
  for (std::uint64_t r : {3u, 5u, 7u, 1201u, 2269u}) EXPECT_EQ(odc::mult_order(1, r), 1u);
  EXPECT_THROW(odc::mult_order(14, 7), std::domain_error);
  EXPECT_THROW(odc::mult_order(3, 9), std::invalid_argument);
}

TEST(MultOrder, PropertiesAgainstNaive) {
  for (std::uint64_t r = 3; r < 700; r += 2) {
    if (!naive_prime(r)) continue;
    for (std::int64_t n = -40; n <= 40; ++n) {
      if (n % static_cast<std::int64_t>(r) == 0) continue;
      const auto k = odc::mult_order(n, r);
      ASSERT_EQ(k, naive_order(n, r));
      ASSERT_EQ((r - 1) % k, 0u);
      const auto h = odc::neg_order(n, r);
      ASSERT_EQ(h.has_value(), k % 2 == 0);
      if (h) {
        ASSERT_EQ(*h * 2, k);
      }
    }
  }
}

TEST(EOf, Convention) {
  EXPECT_EQ(odc::e_of(2, 5), 1u);
  EXPECT_EQ(odc::e_of(2, 7), 2u);
  EXPECT_EQ(odc::e_of(5, 7), 4u);
  EXPECT_EQ(odc::e_of(2, -3), 1u);
  EXPECT_THROW(odc::e_of(2, 4), std::domain_error);
  EXPECT_THROW(odc::e_of(3, 1), std::domain_error);
}

TEST(Cyclotomic, Values) {
  EXPECT_EQ(odc::cyclotomic_value(2, 6), 3);
  EXPECT_EQ(odc::cyclotomic_value(7, 4), 50);
  EXPECT_EQ(odc::cyclotomic_value(-2, 3), 3);
  EXPECT_EQ(odc::cyclotomic_value(10, 12), 9901);
}

TEST(Zsigmondy, Examples) {
  EXPECT_TRUE(odc::primitive_prime_divisors(2, 6).empty());
  EXPECT_TRUE(odc::primitive_prime_divisors(3, 1).empty());
  EXPECT_EQ(odc::primitive_prime_divisors(7, 4), (std::vector<BigInt>{5}));
  EXPECT_THROW(odc::primitive_prime_divisors(1, 3), std::domain_error);
  EXPECT_THROW(odc::primitive_prime_divisors(-1, 3), std::domain_error);
}

TEST(Zsigmondy, SweepMatchesExceptionListAndDirectCheck) {
  const std::set<std::pair<int, int>> exceptions = {{2, 1}, {2, 6}, {-2, 2},
                                                    {-2, 3}, {3, 1}, {-3, 2}};
  for (int n = -30; n <= 30; ++n) {
    if (n >= -1 && n <= 1) continue;
    for (int i = 1; i <= 20; ++i) {
      const auto R = odc::primitive_prime_divisors(n, i);
      EXPECT_EQ(R.empty(), exceptions.count({n, i}) > 0) << n << ' ' << i;
      for (const auto& r : R) {
        // direct check of the definition with e's convention at 2
        if (r == 2) {
          EXPECT_EQ(((n % 4) + 4) % 4 == 1 ? 1 : 2, i);
          continue;
        }
        for (int k = 1; k <= i; ++k) {
          const bool divides = (odc::ipow(BigInt(n), k) - 1) % r == 0;
          EXPECT_EQ(divides, k == i) << n << ' ' << i << ' ' << r << ' ' << k;
        }
      }
    }
  }
}
