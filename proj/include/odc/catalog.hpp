#pragma once

// Orders of the finite simple groups and bounded searches over them.
//
// Lie-type orders are kept as p^(N k) * prod Phi_j(p)^c_j / d, i.e. as a
// multiset of cyclotomic indices over the characteristic, which makes both
// the prime-containment scan and exact factorisation cheap.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "odc/arith.hpp"
#include "odc/unitary.hpp"

namespace odc {

enum class Family {
  Alt, Sporadic, A, A2, B, C, D, D2, G2, F4, E6, E62, E7, E8, D43, B22, G22, F42, Tits
};

inline bool is_lie(Family f) {
  return f != Family::Alt && f != Family::Sporadic && f != Family::Tits;
}

struct GroupSpec {
  Family family = Family::Alt;
  unsigned rank = 0;   // Lie rank; n for Alt_n; unused otherwise
  std::uint64_t p = 0; // characteristic
  unsigned k = 0;      // q = p^k
  std::string name;    // sporadic name

  static GroupSpec alt(unsigned n) { return {Family::Alt, n, 0, 0, {}}; }
  static GroupSpec sporadic(std::string n) { return {Family::Sporadic, 0, 0, 0, std::move(n)}; }
  static GroupSpec tits() { return {Family::Tits, 0, 2, 1, {}}; }
  static GroupSpec lie(Family f, unsigned rank, std::uint64_t p, unsigned k) {
    return {f, rank, p, k, {}};
  }
  static GroupSpec unitary(unsigned n, std::uint64_t p, unsigned k) {
    return lie(Family::A2, n - 1, p, k);
  }

  BigInt q() const { return ipow(BigInt(p), k); }

  std::string q_label() const {
    return k > 1 ? std::to_string(p) + "^" + std::to_string(k) : std::to_string(p);
  }

  std::string label() const {
    const std::string r = std::to_string(rank), ql = "(" + q_label() + ")";
    switch (family) {
      case Family::Alt: return "Alt_" + r;
      case Family::Sporadic: return name;
      case Family::Tits: return "2F_4(2)'";
      case Family::A: return "L_" + std::to_string(rank + 1) + ql;
      case Family::A2: return "U_" + std::to_string(rank + 1) + ql;
      case Family::B: return "B_" + r + ql;
      case Family::C: return "C_" + r + ql;
      case Family::D: return "D_" + r + ql;
      case Family::D2: return "2D_" + r + ql;
      case Family::G2: return "G_2" + ql;
      case Family::F4: return "F_4" + ql;
      case Family::E6: return "E_6" + ql;
      case Family::E62: return "2E_6" + ql;
      case Family::E7: return "E_7" + ql;
      case Family::E8: return "E_8" + ql;
      case Family::D43: return "3D_4" + ql;
      case Family::B22: return "2B_2" + ql;
      case Family::G22: return "2G_2" + ql;
      case Family::F42: return "2F_4" + ql;
    }
    return "?";
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return std::tie(a.family, a.rank, a.p, a.k, a.name) == std::tie(b.family, b.rank, b.p, b.k, b.name);
  }
  friend bool operator<(const GroupSpec& a, const GroupSpec& b) {
    return std::tie(a.family, a.rank, a.p, a.k, a.name) < std::tie(b.family, b.rank, b.p, b.k, b.name);
  }
};

namespace detail {

struct SporadicEntry {
  const char* name;
  const char* factored;
  const char* decimal;
  unsigned out;
};

inline const std::array<SporadicEntry, 26>& sporadic_table() {
  static const std::array<SporadicEntry, 26> t = {{
      {"M_11", "2^4*3^2*5*11", "7920", 1},
      {"M_12", "2^6*3^3*5*11", "95040", 2},
      {"J_1", "2^3*3*5*7*11*19", "175560", 1},
      {"M_22", "2^7*3^2*5*7*11", "443520", 2},
      {"J_2", "2^7*3^3*5^2*7", "604800", 2},
      {"M_23", "2^7*3^2*5*7*11*23", "10200960", 1},
      {"HS", "2^9*3^2*5^3*7*11", "44352000", 2},
      {"J_3", "2^7*3^5*5*17*19", "50232960", 2},
      {"M_24", "2^10*3^3*5*7*11*23", "244823040", 1},
      {"McL", "2^7*3^6*5^3*7*11", "898128000", 2},
      {"He", "2^10*3^3*5^2*7^3*17", "4030387200", 2},
      {"Ru", "2^14*3^3*5^3*7*13*29", "145926144000", 1},
      {"Suz", "2^13*3^7*5^2*7*11*13", "448345497600", 2},
      {"O'N", "2^9*3^4*5*7^3*11*19*31", "460815505920", 2},
      {"Co_3", "2^10*3^7*5^3*7*11*23", "495766656000", 1},
      {"Co_2", "2^18*3^6*5^3*7*11*23", "42305421312000", 1},
      {"Fi_22", "2^17*3^9*5^2*7*11*13", "64561751654400", 2},
      {"HN", "2^14*3^6*5^6*7*11*19", "273030912000000", 2},
      {"Ly", "2^8*3^7*5^6*7*11*31*37*67", "51765179004000000", 1},
      {"Th", "2^15*3^10*5^3*7^2*13*19*31", "90745943887872000", 1},
      {"Fi_23", "2^18*3^13*5^2*7*11*13*17*23", "4089470473293004800", 1},
      {"Co_1", "2^21*3^9*5^4*7^2*11*13*23", "4157776806543360000", 1},
      {"J_4", "2^21*3^3*5*7*11^3*23*29*31*37*43", "86775571046077562880", 1},
      {"Fi_24'", "2^21*3^16*5^2*7^3*11*13*17*23*29", "1255205709190661721292800", 2},
      {"B", "2^41*3^13*5^6*7^2*11*13*17*19*23*31*47", "4154781481226426191177580544000000", 1},
      {"M", "2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71",
       "808017424794512875886459904961710757005754368000000000", 1},
  }};
  return t;
}

inline const SporadicEntry& sporadic_entry(const std::string& name) {
  for (const auto& e : sporadic_table())
    if (name == e.name) return e;
  throw std::invalid_argument("unknown sporadic group: " + name);
}

// One factor q^i - eps of a Lie-type order, with multiplicity +1 or -1.
struct Term {
  unsigned i;
  int eps;
  int mult = 1;
};

struct Shape {
  unsigned positive_roots;  // N: |P|_p = q^N
  std::vector<Term> terms;
  BigInt d;
};

inline std::uint64_t gcd_big(std::uint64_t a, const BigInt& b) {
  BigInt r = b % a;
  if (r < 0) r += a;
  return std::gcd(a, r.convert_to<std::uint64_t>());
}

inline Shape shape(const GroupSpec& g) {
  const unsigned n = g.rank;
  const BigInt q = g.q();
  Shape s{0, {}, 1};
  auto minus = [&](unsigned i) { s.terms.push_back({i, 1, 1}); };
  auto plus = [&](unsigned i) { s.terms.push_back({i, -1, 1}); };
  switch (g.family) {
    case Family::A:
      s.positive_roots = n * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) minus(i);
      s.d = gcd_big(n + 1, q - 1);
      break;
    case Family::A2:
      s.positive_roots = n * (n + 1) / 2;
      for (unsigned i = 2; i <= n + 1; ++i) (i % 2 ? plus(i) : minus(i));
      s.d = gcd_big(n + 1, q + 1);
      break;
    case Family::B:
    case Family::C:
      s.positive_roots = n * n;
      for (unsigned i = 1; i <= n; ++i) minus(2 * i);
      s.d = gcd_big(2, q - 1);
      break;
    case Family::D:
      s.positive_roots = n * (n - 1);
      minus(n);
      for (unsigned i = 1; i < n; ++i) minus(2 * i);
      s.d = gcd_big(4, ipow(q, n) - 1);
      break;
    case Family::D2:
      s.positive_roots = n * (n - 1);
      plus(n);
      for (unsigned i = 1; i < n; ++i) minus(2 * i);
      s.d = gcd_big(4, ipow(q, n) + 1);
      break;
    case Family::G2:
      s.positive_roots = 6;
      minus(6), minus(2);
      break;
    case Family::F4:
      s.positive_roots = 24;
      minus(12), minus(8), minus(6), minus(2);
      break;
    case Family::E6:
      s.positive_roots = 36;
      for (unsigned i : {12u, 9u, 8u, 6u, 5u, 2u}) minus(i);
      s.d = gcd_big(3, q - 1);
      break;
    case Family::E62:
      s.positive_roots = 36;
      minus(12), plus(9), minus(8), minus(6), plus(5), minus(2);
      s.d = gcd_big(3, q + 1);
      break;
    case Family::E7:
      s.positive_roots = 63;
      for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) minus(i);
      s.d = gcd_big(2, q - 1);
      break;
    case Family::E8:
      s.positive_roots = 120;
      for (unsigned i : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) minus(i);
      break;
    case Family::D43:
      // (q^8 + q^4 + 1) = (q^12 - 1) / (q^4 - 1)
      s.positive_roots = 12;
      minus(12);
      s.terms.push_back({4, 1, -1});
      minus(6), minus(2);
      break;
    case Family::B22:
      s.positive_roots = 2;
      plus(2), minus(1);
      break;
    case Family::G22:
      s.positive_roots = 3;
      plus(3), minus(1);
      break;
    case Family::F42:
      s.positive_roots = 12;
      plus(6), minus(4), plus(3), minus(1);
      break;
    default:
      throw std::logic_error("not a Lie-type family");
  }
  return s;
}

// The multiset {j : Phi_j(p) divides the order part} with multiplicities.
inline std::map<std::uint64_t, int> cyclotomic_indices(const GroupSpec& g, const Shape& s) {
  std::map<std::uint64_t, int> out;
  for (const auto& t : s.terms) {
    const std::uint64_t a = std::uint64_t{g.k} * t.i;
    if (t.eps == 1) {
      for (std::uint64_t j = 1; j <= a; ++j)
        if (a % j == 0) out[j] += t.mult;
    } else {
      for (std::uint64_t j = 1; j <= 2 * a; ++j)
        if ((2 * a) % j == 0 && a % j != 0) out[j] += t.mult;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline FactoredInteger factored_cyclotomic(std::uint64_t p, std::uint64_t j) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, FactoredInteger> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, j});
    if (it != cache.end()) return it->second;
  }
  FactoredInteger f = factorize(abs(cyclotomic_value(BigInt(p), j)));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, j), std::move(f)).first->second;
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Checks family constraints and simplicity; throws std::invalid_argument.
inline void validate(const GroupSpec& g) {
  auto fail = [&g](const std::string& why) {
    throw std::invalid_argument(g.label() + ": " + why);
  };
  if (g.family == Family::Alt) {
    if (g.rank < 5) fail("Alt_n needs n >= 5");
    return;
  }
  if (g.family == Family::Sporadic) {
    detail::sporadic_entry(g.name);
    return;
  }
  if (g.family == Family::Tits) return;
  if (!is_prime(g.p) || g.k < 1) fail("bad field size");
  const BigInt q = g.q();
  switch (g.family) {
    case Family::A:
      if (g.rank < 1) fail("rank >= 1");
      if (g.rank == 1 && q <= 3) fail("not simple");
      break;
    case Family::A2:
      if (g.rank < 2) fail("rank >= 2");
      if (g.rank == 2 && q == 2) fail("not simple");
      break;
    case Family::B:
      if (g.rank < 2) fail("rank >= 2");
      if (g.rank == 2 && q == 2) fail("not simple");
      break;
    case Family::C:
      if (g.rank < 3) fail("rank >= 3");
      if (g.p == 2) fail("C_n(2^k) is B_n(2^k)");
      break;
    case Family::D:
    case Family::D2:
      if (g.rank < 4) fail("rank >= 4");
      break;
    case Family::G2:
      if (q == 2) fail("not simple");
      break;
    case Family::B22:
      if (g.p != 2 || g.k % 2 == 0 || g.k < 3) fail("needs q = 2^(2m+1) >= 8");
      break;
    case Family::G22:
      if (g.p != 3 || g.k % 2 == 0 || g.k < 3) fail("needs q = 3^(2m+1) >= 27");
      break;
    case Family::F42:
      if (g.p != 2 || g.k % 2 == 0 || g.k < 3) fail("needs q = 2^(2m+1) >= 8");
      break;
    default:
      break;
  }
}

/// The representative of the isomorphism class of g. Coincidences collapsed:
/// L_2(4) = L_2(5) = Alt_5, L_2(9) = Alt_6, L_4(2) = Alt_8, L_3(2) = L_2(7),
/// B_2(3) = U_4(2), C_n(q) = B_n(q) for even q.
inline GroupSpec canonical(const GroupSpec& g) {
  const BigInt q = is_lie(g.family) ? g.q() : BigInt(0);
  if (g.family == Family::A && g.rank == 1 && (q == 4 || q == 5)) return GroupSpec::alt(5);
  if (g.family == Family::A && g.rank == 1 && q == 9) return GroupSpec::alt(6);
  if (g.family == Family::A && g.rank == 3 && q == 2) return GroupSpec::alt(8);
  if (g.family == Family::A && g.rank == 2 && q == 2) return GroupSpec::lie(Family::A, 1, 7, 1);
  if (g.family == Family::B && g.rank == 2 && q == 3) return GroupSpec::unitary(4, 2, 1);
  if (g.family == Family::C && g.p == 2) return GroupSpec::lie(Family::B, g.rank, g.p, g.k);
  return g;
}

/// Other names of the class represented by canonical spec g.
inline std::vector<std::string> aliases(const GroupSpec& g) {
  std::vector<std::string> out;
  if (g.family == Family::Alt && g.rank == 5) out = {"L_2(4)", "L_2(5)"};
  if (g.family == Family::Alt && g.rank == 6) out = {"L_2(9)"};
  if (g.family == Family::Alt && g.rank == 8) out = {"L_4(2)"};
  if (g.family == Family::A && g.rank == 1 && g.p == 7 && g.k == 1) out = {"L_3(2)"};
  if (g.family == Family::A2 && g.rank == 3 && g.p == 2 && g.k == 1) out = {"B_2(3)", "S_4(3)"};
  if (g.family == Family::B && g.rank == 2) out.push_back("C_2(" + g.q_label() + ")");
  if (g.family == Family::B && g.rank >= 3 && g.p == 2) out.push_back("C_" + std::to_string(g.rank) + "(" + g.q_label() + ")");
  return out;
}

inline bool is_canonical(const GroupSpec& g) { return canonical(g) == g; }

/// |P| as an integer.
inline BigInt simple_order_value(const GroupSpec& g) {
  validate(g);
  switch (g.family) {
    case Family::Alt: return detail::factorial(g.rank) / 2;
    case Family::Sporadic: return BigInt(detail::sporadic_entry(g.name).decimal);
    case Family::Tits: return 17971200;
    default: break;
  }
  const auto s = detail::shape(g);
  const BigInt q = g.q();
  BigInt num = ipow(q, s.positive_roots), den = s.d;
  for (const auto& t : s.terms) {
    const BigInt f = ipow(q, t.i) - t.eps;
    (t.mult > 0 ? num : den) *= f;
  }
  if (num % den != 0) throw std::logic_error("order formula not integral for " + g.label());
  return num / den;
}

/// |P| fully factored.
inline FactoredInteger simple_order(const GroupSpec& g) {
  validate(g);
  switch (g.family) {
    case Family::Alt: {
      FactoredInteger f;
      for (unsigned i = 3; i <= g.rank; ++i) f *= factorize(BigInt(i));  // 3*4*...*n = n!/2
      return f;
    }
    case Family::Sporadic: {
      const auto& e = detail::sporadic_entry(g.name);
      return FactoredInteger::parse(e.factored);
    }
    case Family::Tits: return FactoredInteger::parse("2^11*3^3*5^2*13");
    default: break;
  }
  const auto s = detail::shape(g);
  FactoredInteger num = FactoredInteger::prime_power(g.p, s.positive_roots * g.k);
  for (const auto& [j, c] : detail::cyclotomic_indices(g, s)) {
    if (c < 0) throw std::logic_error("negative cyclotomic multiplicity");
    const FactoredInteger phi = detail::factored_cyclotomic(g.p, j);
    for (int i = 0; i < c; ++i) num *= phi;
  }
  return num.divide_exact(factorize(s.d));
}

/// |Out(P)|.
inline BigInt out_order(const GroupSpec& g) {
  validate(g);
  const BigInt m = g.k;
  const BigInt q = is_lie(g.family) ? g.q() : BigInt(0);
  auto gcd_q = [](unsigned a, const BigInt& b) { return BigInt(detail::gcd_big(a, b)); };
  const unsigned n = g.rank;
  switch (g.family) {
    case Family::Alt: return n == 6 ? 4 : 2;
    case Family::Sporadic: return detail::sporadic_entry(g.name).out;
    case Family::Tits: return 2;
    case Family::A: return n == 1 ? gcd_q(2, q - 1) * m : gcd_q(n + 1, q - 1) * 2 * m;
    case Family::A2: return gcd_q(n + 1, q + 1) * 2 * m;
    case Family::B:
      if (g.p == 2) return n == 2 ? 2 * m : m;
      return 2 * m;
    case Family::C: return 2 * m;
    case Family::D: return gcd_q(4, ipow(q, n) - 1) * m * (n == 4 ? 6 : 2);
    case Family::D2: return gcd_q(4, ipow(q, n) + 1) * 2 * m;
    case Family::G2: return m * (g.p == 3 ? 2 : 1);
    case Family::F4: return m * (g.p == 2 ? 2 : 1);
    case Family::E6: return gcd_q(3, q - 1) * 2 * m;
    case Family::E62: return gcd_q(3, q + 1) * 2 * m;
    case Family::E7: return gcd_q(2, q - 1) * m;
    case Family::E8: return m;
    case Family::D43: return 3 * m;
    case Family::B22:
    case Family::G22:
    case Family::F42: return m;
  }
  return 1;
}

inline std::vector<GroupSpec> sporadic_groups() {
  std::vector<GroupSpec> out;
  for (const auto& e : detail::sporadic_table()) out.push_back(GroupSpec::sporadic(e.name));
  return out;
}

namespace detail {

constexpr std::array<Family, 16> kLieFamilies = {
    Family::A,  Family::A2, Family::B,  Family::C,  Family::D,   Family::D2,  Family::G2,  Family::F4,
    Family::E6, Family::E62, Family::E7, Family::E8, Family::D43, Family::B22, Family::G22, Family::F42};

inline unsigned min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::A2:
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D:
    case Family::D2: return 4;
    default: return 0;
  }
}

inline bool has_rank(Family f) { return min_rank(f) > 0; }

// N(rank) for the family, i.e. log_q of the p-part.
inline unsigned positive_roots(Family f, unsigned n) {
  switch (f) {
    case Family::A:
    case Family::A2: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D:
    case Family::D2: return n * (n - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6:
    case Family::E62: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::D43: return 12;
    case Family::B22: return 2;
    case Family::G22: return 3;
    case Family::F42: return 12;
    default: return 0;
  }
}

// Largest cyclotomic index (over p) in the order of the family at (n, k).
inline std::uint64_t top_index(Family f, unsigned n, unsigned k) {
  const std::uint64_t m = k;
  switch (f) {
    case Family::A: return m * (n + 1);
    case Family::A2: return (n + 1) % 2 ? 2 * m * (n + 1) : 2 * m * n;
    case Family::B:
    case Family::C: return 2 * m * n;
    case Family::D: return 2 * m * (n - 1);
    case Family::D2: return 2 * m * n;
    case Family::G2: return 6 * m;
    case Family::F4:
    case Family::E6:
    case Family::D43: return 12 * m;
    case Family::E62:
    case Family::E7: return 18 * m;
    case Family::E8: return 30 * m;
    case Family::B22: return 4 * m;
    case Family::G22: return 6 * m;
    case Family::F42: return 12 * m;
    default: return 0;
  }
}

inline bool field_ok(Family f, std::uint64_t p, unsigned k) {
  if (f == Family::B22 || f == Family::F42) return p == 2 && k % 2 == 1 && k >= 3;
  if (f == Family::G22) return p == 3 && k % 2 == 1 && k >= 3;
  if (f == Family::C) return p != 2;
  return true;
}

inline bool simple_ok(const GroupSpec& g) {
  try {
    validate(g);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

inline bool divides_all(const std::vector<BigInt>& primes, const BigInt& order) {
  return std::all_of(primes.begin(), primes.end(), [&](const BigInt& r) { return order % r == 0; });
}

// Removes every prime of `allowed` from v; true when nothing else remains.
inline bool supported_by(BigInt v, const std::vector<BigInt>& allowed) {
  for (const auto& r : allowed)
    while (v % r == 0) v /= r;
  return v == 1;
}

inline void sort_specs(std::vector<GroupSpec>& v) {
  std::vector<std::pair<BigInt, std::string>> keys;
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (const auto& g : v) keys.emplace_back(simple_order_value(g), g.label());
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<GroupSpec> out;
  for (auto i : idx) out.push_back(v[i]);
  v = std::move(out);
}

inline void dedupe(std::vector<GroupSpec>& v) {
  for (auto& g : v) g = canonical(g);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// All simple groups P with |P| dividing N and required <= pi(P) <= allowed,
/// one per isomorphism class, ascending by (order, label).
inline std::vector<GroupSpec> candidates(const FactoredInteger& N, const std::vector<BigInt>& required,
                                         const std::vector<BigInt>& allowed) {
  const BigInt& n = N.value();
  std::vector<GroupSpec> out;
  auto consider = [&](const GroupSpec& g) {
    const BigInt o = simple_order_value(g);
    if (n % o != 0) return false;
    if (detail::divides_all(required, o) && detail::supported_by(o, allowed)) out.push_back(g);
    return true;
  };
  // alternating: n!/2 grows, so stop at the first failure
  for (unsigned m = 5;; ++m)
    if (!consider(GroupSpec::alt(m))) break;
  for (const auto& g : sporadic_groups()) consider(g);
  consider(GroupSpec::tits());
  for (const auto& f : N.factors()) {
    if (!fits_u64(f.prime)) continue;
    const auto p = f.prime.convert_to<std::uint64_t>();
    const unsigned v = f.exponent;
    for (Family fam : detail::kLieFamilies) {
      const unsigned r0 = detail::min_rank(fam);
      for (unsigned rank = r0;; ++rank) {
        if (detail::positive_roots(fam, rank) > v) break;
        for (unsigned k = 1; detail::positive_roots(fam, rank) * k <= v; ++k) {
          if (!detail::field_ok(fam, p, k)) continue;
          const GroupSpec g = GroupSpec::lie(fam, rank, p, k);
          if (!detail::simple_ok(g)) continue;
          consider(g);
        }
        if (!detail::has_rank(fam)) break;
      }
    }
  }
  detail::dedupe(out);
  detail::sort_specs(out);
  return out;
}

/// Lie-type groups L(p^k) with r in pi(L) and pi(L) within allowed.
///
/// For each characteristic p the primes of `allowed` fix the set I of orders
/// e(s, p) that may occur; every cyclotomic index of the group order must lie
/// in I or be a Bang-Zsigmondy exception for p, which bounds rank and k.
inline std::vector<GroupSpec> lie_with_prime(const BigInt& r, const std::vector<BigInt>& allowed) {
  if (std::find(allowed.begin(), allowed.end(), r) == allowed.end())
    throw std::invalid_argument("r must belong to the allowed set");
  std::vector<GroupSpec> out;
  for (const auto& pb : allowed) {
    const auto p = to_u64(pb);
    std::set<std::uint64_t> ok;
    for (const auto& s : allowed)
      if (s != pb) ok.insert(e_of(s, pb));
    if (p == 2) ok.insert({1, 6});
    if (p == 3) ok.insert(1);
    const std::uint64_t top = *ok.rbegin();
    for (Family fam : detail::kLieFamilies) {
      for (unsigned rank = detail::min_rank(fam);; ++rank) {
        if (detail::top_index(fam, rank, 1) > top) break;
        // each order term contributes its own top index and at least half of
        // them are distinct (all of them outside 2A), so rank <= 2|I| + 1
        if (detail::has_rank(fam) && rank > 2 * ok.size() + 1) break;
        for (unsigned k = 1; detail::top_index(fam, rank, k) <= top; ++k) {
          // the top index always occurs, so it must be admissible
          if (!ok.count(detail::top_index(fam, rank, k)) || !detail::field_ok(fam, p, k)) continue;
          const GroupSpec g = GroupSpec::lie(fam, rank, p, k);
          if (!detail::simple_ok(g)) continue;
          const auto s = detail::shape(g);
          const auto idx = detail::cyclotomic_indices(g, s);
          const bool fits = std::all_of(idx.begin(), idx.end(),
                                        [&](const auto& jc) { return ok.count(jc.first) > 0; });
          if (!fits) continue;
          const BigInt o = simple_order_value(g);
          if (o % r == 0 && detail::supported_by(o, allowed)) out.push_back(g);
        }
        if (!detail::has_rank(fam)) break;
      }
    }
  }
  detail::dedupe(out);
  detail::sort_specs(out);
  return out;
}

/// Parses labels such as "U_4(7^2)", "L_2(49)", "B_2(59)", "Alt_7", "M_11",
/// "2F_4(2)'".
inline GroupSpec parse_group(std::string_view text) {
  const std::string s(text);
  if (s == "2F_4(2)'") return GroupSpec::tits();
  for (const auto& e : detail::sporadic_table())
    if (s == e.name) return GroupSpec::sporadic(e.name);
  auto bad = [&s](const std::string& why) -> GroupSpec {
    throw std::invalid_argument("cannot parse group '" + s + "': " + why);
  };
  if (s.rfind("Alt_", 0) == 0) {
    const BigInt n = parse_bigint(s.substr(4));
    GroupSpec g = GroupSpec::alt(n.convert_to<unsigned>());
    validate(g);
    return g;
  }
  const auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close != s.size() - 1) return bad("expected NAME(q)");
  const std::string head = s.substr(0, open), qs = s.substr(open + 1, close - open - 1);
  const auto caret = qs.find('^');
  BigInt pb = parse_bigint(qs.substr(0, caret));
  unsigned k = caret == std::string::npos ? 1 : parse_bigint(qs.substr(caret + 1)).convert_to<unsigned>();
  if (caret == std::string::npos && pb > 1) {
    // a bare prime power such as 8
    const auto f = factorize(pb);
    if (f.factors().size() == 1) {
      pb = f.factors()[0].prime;
      k = f.factors()[0].exponent;
    }
  }
  if (!is_prime(pb)) return bad("field size must be a prime power");
  const auto p = to_u64(pb);
  static const std::map<std::string, Family> fixed = {
      {"G_2", Family::G2},  {"F_4", Family::F4},   {"E_6", Family::E6},   {"2E_6", Family::E62},
      {"E_7", Family::E7},  {"E_8", Family::E8},   {"3D_4", Family::D43}, {"2B_2", Family::B22},
      {"Sz", Family::B22},  {"2G_2", Family::G22}, {"2F_4", Family::F42}};
  GroupSpec g;
  if (auto it = fixed.find(head); it != fixed.end()) {
    g = GroupSpec::lie(it->second, 0, p, k);
  } else {
    const auto us = head.find('_');
    if (us == std::string::npos) return bad("unknown family");
    const std::string fam = head.substr(0, us);
    const unsigned n = parse_bigint(head.substr(us + 1)).convert_to<unsigned>();
    if (fam == "L") g = GroupSpec::lie(Family::A, n - 1, p, k);
    else if (fam == "U") g = GroupSpec::lie(Family::A2, n - 1, p, k);
    else if (fam == "B") g = GroupSpec::lie(Family::B, n, p, k);
    else if (fam == "C") g = GroupSpec::lie(Family::C, n, p, k);
    else if (fam == "S") g = GroupSpec::lie(Family::B, n / 2, p, k);  // S_2n(q) = C_n(q)
    else if (fam == "D") g = GroupSpec::lie(Family::D, n, p, k);
    else if (fam == "2D") g = GroupSpec::lie(Family::D2, n, p, k);
    else return bad("unknown family");
    if (fam == "S" && n % 2) return bad("S_n needs even n");
    if (fam == "S" && n / 2 >= 3 && p != 2) g.family = Family::C;
  }
  if (g.family == Family::C && p == 2) g.family = Family::B;
  validate(g);
  return g;
}

}  // namespace odc
