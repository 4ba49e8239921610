#pragma once

// Orders, spectra and maximal element orders of the projective special
// unitary groups U_n(q) = PSU_n(q), q = p^k.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "odc/arith.hpp"

namespace odc {

struct UnitaryParams {
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;

  UnitaryParams() = default;
  UnitaryParams(unsigned n_, std::uint64_t p_, unsigned k_) : n(n_), p(p_), k(k_) {
    if (n < 2) throw std::invalid_argument("U_n(q) needs n >= 2");
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field exponent must be >= 1");
  }

  BigInt q() const { return ipow(BigInt(p), k); }
  std::uint64_t d() const { return std::gcd<std::uint64_t>(n, to_u64(BigInt((q() + 1) % n))); }

  /// U_2(2), U_2(3) and U_3(2) are the non-simple members.
  bool is_simple() const {
    const BigInt qq = q();
    return !((n == 2 && (qq == 2 || qq == 3)) || (n == 3 && qq == 2));
  }

  /// "7^2" for k > 1, "7" otherwise.
  std::string q_label() const {
    return k > 1 ? std::to_string(p) + "^" + std::to_string(k) : std::to_string(p);
  }
  std::string label() const { return "U_" + std::to_string(n) + "(" + q_label() + ")"; }

  friend bool operator==(const UnitaryParams&, const UnitaryParams&) = default;
};

struct Spectrum {
  std::vector<FactoredInteger> mu;  // ascending by value
  // true when mu came from the complete generator list, so its divisor
  // closure is the whole spectrum; false for the closed-form shortcuts.
  bool full_closure_available = false;

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& m : mu) out.push_back(m.to_string());
    return out;
  }
};

/// Drops every element that divides another one; output ascending, distinct.
inline std::vector<FactoredInteger> reduce_to_maximal(std::vector<FactoredInteger> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<FactoredInteger> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < xs.size() && !dominated; ++j) dominated = xs[i].divides(xs[j]);
    if (!dominated) out.push_back(xs[i]);
  }
  return out;
}

namespace detail {

// q^i - (-1)^i, factored; cached per (q, i) within one computation.
class TorusFactors {
 public:
  explicit TorusFactors(BigInt q) : q_(std::move(q)) {}
  const FactoredInteger& operator()(unsigned i) {
    auto it = cache_.find(i);
    if (it != cache_.end()) return it->second;
    const BigInt v = ipow(q_, i) - (i % 2 ? BigInt(-1) : BigInt(1));
    return cache_.emplace(i, factorize(v)).first->second;
  }

 private:
  BigInt q_;
  std::map<unsigned, FactoredInteger> cache_;
};

// All multisets of positive integers with the given sum and exactly s parts,
// as nonincreasing sequences.
inline void partitions(unsigned sum, unsigned parts, unsigned max_part, std::vector<unsigned>& cur,
                       const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (parts == 0) {
    if (sum == 0) visit(cur);
    return;
  }
  if (sum < parts) return;
  for (unsigned x = std::min(max_part, sum - (parts - 1)); x >= 1; --x) {
    cur.push_back(x);
    partitions(sum - x, parts - 1, x, cur, visit);
    cur.pop_back();
  }
}

inline void for_each_partition(unsigned sum, unsigned parts,
                               const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> cur;
  partitions(sum, parts, sum, cur, visit);
}

}  // namespace detail

/// |U_n(q)| = q^C(n,2) prod_{i=2..n} (q^i - (-1)^i) / d.
inline FactoredInteger order_U(const UnitaryParams& u) {
  detail::TorusFactors tf(u.q());
  FactoredInteger out = FactoredInteger::prime_power(u.p, u.k * (u.n * (u.n - 1) / 2));
  for (unsigned i = 2; i <= u.n; ++i) out *= tf(i);
  return out.divide_exact(factorize(u.d()));
}

/// mu(U_n(q)) from the six generator families of the spectrum theorem,
/// reduced to divisibility-maximal elements.
inline Spectrum spectrum_U(const UnitaryParams& u) {
  const unsigned n = u.n;
  const BigInt q = u.q();
  const FactoredInteger d = factorize(u.d());
  detail::TorusFactors tf(q);
  std::vector<FactoredInteger> gens;

  auto lcm_of = [&tf](const std::vector<unsigned>& parts) {
    FactoredInteger l;
    for (unsigned x : parts) l = lcm(l, tf(x));
    return l;
  };

  // (1)
  gens.push_back(tf(n).divide_exact(d * factorize(q + 1)));
  // (2)
  for (unsigned n1 = 1; n1 <= n / 2; ++n1) {
    const unsigned n2 = n - n1;
    const unsigned g = std::gcd(n1, n2);
    if (n % g != 0) throw std::logic_error("n/(n1,n2) not integral");
    const std::uint64_t div = std::gcd<std::uint64_t>(n / g, to_u64(BigInt((q + 1) % (n / g))));
    gens.push_back(lcm(tf(n1), tf(n2)).divide_exact(factorize(div)));
  }
  // (3)
  for (unsigned s = 3; s <= n; ++s)
    detail::for_each_partition(n, s, [&](const auto& parts) { gens.push_back(lcm_of(parts)); });
  // (4)-(6): unipotent part p^j with p^(j-1) + 1 <= n
  for (unsigned j = 1; ipow(BigInt(u.p), j - 1) + 1 <= n; ++j) {
    const unsigned rest = n - (ipow(BigInt(u.p), j - 1) + 1).convert_to<unsigned>();
    const FactoredInteger pk = FactoredInteger::prime_power(u.p, j);
    if (rest == 0) {
      gens.push_back(pk);  // (6)
      continue;
    }
    gens.push_back(pk * tf(rest).divide_exact(d));  // (4)
    for (unsigned s = 2; s <= rest; ++s)          // (5)
      detail::for_each_partition(rest, s, [&](const auto& parts) { gens.push_back(pk * lcm_of(parts)); });
  }
  return Spectrum{reduce_to_maximal(std::move(gens)), true};
}

/// Closed-form mu(U_3(q)) for q >= 3.
inline Spectrum mu_U3(std::uint64_t p, unsigned k) {
  const UnitaryParams u(3, p, k);
  const BigInt q = u.q();
  if (q == 2) throw std::invalid_argument("U_3(2) is not simple");
  const bool minus_one_mod3 = (q + 1) % 3 == 0;
  const BigInt c = minus_one_mod3 ? 3 : 1;
  std::vector<BigInt> vals = {(q * q - q + 1) / c, (q * q - 1) / c, BigInt(p) * (q + 1) / c};
  if (minus_one_mod3) vals.push_back(q + 1);
  if (p == 2) vals.push_back(4);
  std::vector<FactoredInteger> mu;
  for (const auto& v : vals) mu.push_back(factorize(v));
  return Spectrum{reduce_to_maximal(std::move(mu)), false};
}

/// Closed-form mu(U_4(q)) for q >= 2.
inline Spectrum mu_U4(std::uint64_t p, unsigned k) {
  const UnitaryParams u(4, p, k);
  const BigInt q = u.q();
  std::vector<BigInt> vals;
  if (q == 2) {
    vals = {5, 9, 12};
  } else if (p == 2) {
    vals = {(q - 1) * (q * q + 1), q * q * q + 1, 2 * (q * q - 1), 4 * (q + 1)};
  } else {
    const BigInt d = u.d();
    vals = {(q - 1) * (q * q + 1) / d, (q * q * q + 1) / d, BigInt(p) * (q * q - 1) / d, q * q - 1};
    if (d == 4) vals.push_back(BigInt(p) * (q + 1));
    if (p == 3) vals.push_back(9);
  }
  std::vector<FactoredInteger> mu;
  for (const auto& v : vals) mu.push_back(factorize(v));
  return Spectrum{reduce_to_maximal(std::move(mu)), false};
}

/// Connected components of the prime graph determined by mu, as prime sets.
/// The component containing 2 comes first, the rest by least prime.
inline std::vector<std::vector<BigInt>> prime_components(const FactoredInteger& order,
                                                        const Spectrum& s) {
  const auto primes = order.primes();
  std::vector<std::size_t> parent(primes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto index = [&primes](const BigInt& r) {
    return static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), r) - primes.begin());
  };
  for (const auto& m : s.mu) {
    const auto ps = m.primes();
    for (std::size_t i = 1; i < ps.size(); ++i) parent[find(index(ps[i]))] = find(index(ps[0]));
  }
  std::map<std::size_t, std::vector<BigInt>> groups;
  for (std::size_t i = 0; i < primes.size(); ++i) groups[find(i)].push_back(primes[i]);
  std::vector<std::vector<BigInt>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const bool a2 = a.front() == 2, b2 = b.front() == 2;
    if (a2 != b2) return a2;
    return a.front() < b.front();
  });
  return out;
}

/// The order components m_1, ..., m_s: the parts of |G| over each component.
inline std::vector<FactoredInteger> order_components(const UnitaryParams& u, const Spectrum& s) {
  const FactoredInteger order = order_U(u);
  std::vector<FactoredInteger> out;
  for (const auto& comp : prime_components(order, s)) {
    out.push_back(order.restrict_to(
        [&comp](const BigInt& r) { return std::binary_search(comp.begin(), comp.end(), r); }));
  }
  return out;
}

/// Vertex classes of GK(U_n(q)) used to keep compact drawings faithful.
/// U_3: {2}, {3}, {p}, R_1 \ {2,3}, R_2 \ {2,3}, R_6. U_4: {p}, R_1, R_2, R_4, R_6.
/// Empty for other n.
inline std::vector<std::vector<BigInt>> class_hints(const UnitaryParams& u) {
  const BigInt q = u.q();
  std::vector<std::vector<BigInt>> out;
  auto without_23 = [](std::vector<BigInt> v) {
    std::erase_if(v, [](const BigInt& r) { return r == 2 || r == 3; });
    return v;
  };
  if (u.n == 3) {
    out = {{2}, {3}};
    if (u.p > 3) out.push_back({BigInt(u.p)});
    out.push_back(without_23(primitive_prime_divisors(q, 1)));
    out.push_back(without_23(primitive_prime_divisors(q, 2)));
    out.push_back(primitive_prime_divisors(q, 6));
  } else if (u.n == 4) {
    out = {{BigInt(u.p)}};
    for (unsigned i : {1u, 2u, 4u, 6u}) out.push_back(primitive_prime_divisors(q, i));
  }
  std::erase_if(out, [](const auto& c) { return c.empty(); });
  return out;
}

}  // namespace odc
