#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odc/arith/bigint.hpp"
#include "odc/arith/primality.hpp"

namespace odc {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer carried together with its complete factorization.
///
/// Factors are kept with strictly ascending primes and positive exponents;
/// the value 1 has no factors.
class FactoredInteger {
 public:
  FactoredInteger() : value_(1) {}

  /// Builds from an explicit factor list, checking every invariant
  /// (ascending primes, each prime certified, exponents >= 1).
  static FactoredInteger from_factors(std::vector<PrimePower> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].exponent == 0) throw std::invalid_argument("zero exponent in factorization");
      if (i > 0 && !(factors[i - 1].prime < factors[i].prime))
        throw std::invalid_argument("primes must be strictly ascending");
      if (!is_prime(factors[i].prime))
        throw std::invalid_argument("not a prime: " + factors[i].prime.str());
    }
    return FactoredInteger(std::move(factors), Trusted{});
  }

  static FactoredInteger prime_power(const BigInt& p, unsigned e) {
    if (e == 0) return {};
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.str());
    return FactoredInteger({{p, e}}, Trusted{});
  }

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::vector<BigInt> primes() const {
    std::vector<BigInt> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
  }

  unsigned exponent_of(const BigInt& p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const PrimePower& f, const BigInt& x) { return f.prime < x; });
    return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
  }

  bool has_prime(const BigInt& p) const { return exponent_of(p) > 0; }

  /// The largest power of p dividing this value.
  BigInt part(const BigInt& p) const { return ipow(p, exponent_of(p)); }

  bool divides(const FactoredInteger& other) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const PrimePower& f) {
      return other.exponent_of(f.prime) >= f.exponent;
    });
  }

  friend FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b) {
    return merge(a, b, [](unsigned x, unsigned y) { return x + y; });
  }
  FactoredInteger& operator*=(const FactoredInteger& o) { return *this = *this * o; }

  friend FactoredInteger lcm(const FactoredInteger& a, const FactoredInteger& b) {
    return merge(a, b, [](unsigned x, unsigned y) { return std::max(x, y); });
  }
  friend FactoredInteger gcd(const FactoredInteger& a, const FactoredInteger& b) {
    return merge(a, b, [](unsigned x, unsigned y) { return std::min(x, y); });
  }

  /// this / d; throws std::domain_error unless d divides this.
  FactoredInteger divide_exact(const FactoredInteger& d) const {
    if (!d.divides(*this))
      throw std::domain_error("inexact division: " + d.to_string() + " does not divide " +
                              to_string());
    std::vector<PrimePower> out;
    for (const auto& f : factors_) {
      const unsigned e = f.exponent - d.exponent_of(f.prime);
      if (e > 0) out.push_back({f.prime, e});
    }
    return FactoredInteger(std::move(out), Trusted{});
  }

  /// Keeps only the primes selected by pred.
  template <class Pred>
  FactoredInteger restrict_to(Pred pred) const {
    std::vector<PrimePower> out;
    for (const auto& f : factors_)
      if (pred(f.prime)) out.push_back(f);
    return FactoredInteger(std::move(out), Trusted{});
  }

  /// "2^6*3^4*5", or "1".
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty()) s += '*';
      s += f.prime.str();
      if (f.exponent > 1) s += '^' + std::to_string(f.exponent);
    }
    return s;
  }

  /// Inverse of to_string(). Primality of every base is certified.
  static FactoredInteger parse(std::string_view text) {
    if (text == "1") return {};
    std::vector<PrimePower> fs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t star = std::min(text.find('*', pos), text.size());
      const std::string_view term = text.substr(pos, star - pos);
      const std::size_t caret = term.find('^');
      PrimePower pp;
      pp.prime = parse_bigint(term.substr(0, caret));
      pp.exponent = 1;
      if (caret != std::string_view::npos) {
        const BigInt e = parse_bigint(term.substr(caret + 1));
        if (e < 1 || e > 1'000'000) throw std::invalid_argument("bad exponent in " + std::string(term));
        pp.exponent = e.convert_to<unsigned>();
      }
      fs.push_back(std::move(pp));
      pos = star + 1;
    }
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
    std::vector<PrimePower> merged;
    for (auto& f : fs) {
      if (!merged.empty() && merged.back().prime == f.prime)
        merged.back().exponent += f.exponent;
      else
        merged.push_back(std::move(f));
    }
    return from_factors(std::move(merged));
  }

  friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) {
    return a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const FactoredInteger& a, const FactoredInteger& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const FactoredInteger& f) {
    return os << f.to_string();
  }

 private:
  struct Trusted {};

  FactoredInteger(std::vector<PrimePower> factors, Trusted) : factors_(std::move(factors)) {
    value_ = 1;
    for (const auto& f : factors_) value_ *= ipow(f.prime, f.exponent);
  }

  template <class Op>
  static FactoredInteger merge(const FactoredInteger& a, const FactoredInteger& b, Op op) {
    std::vector<PrimePower> out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    auto emit = [&out](const BigInt& p, unsigned e) {
      if (e > 0) out.push_back({p, e});
    };
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->prime < j->prime)) {
        emit(i->prime, op(i->exponent, 0u));
        ++i;
      } else if (i == a.factors_.end() || j->prime < i->prime) {
        emit(j->prime, op(0u, j->exponent));
        ++j;
      } else {
        emit(i->prime, op(i->exponent, j->exponent));
        ++i;
        ++j;
      }
    }
    return FactoredInteger(std::move(out), Trusted{});
  }

  std::vector<PrimePower> factors_;
  BigInt value_;
};

/// The ascending set of primes dividing n.
inline std::vector<BigInt> prime_set(const FactoredInteger& n) { return n.primes(); }

}  // namespace odc
