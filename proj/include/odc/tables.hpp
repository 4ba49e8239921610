#pragma once

// Tables of orders, spectra and degree patterns computed from the formulas,
// each cell paired with the published value for diffing.

#include <algorithm>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "odc/graph.hpp"
#include "odc/printed.hpp"
#include "odc/unitary.hpp"

namespace odc {

struct Cell {
  std::string column;
  std::string printed;
  std::string computed;
  bool matches() const { return printed == computed; }
};

struct TableRow {
  std::string group;
  std::vector<Cell> cells;
  bool matches() const {
    return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.matches(); });
  }
};

namespace detail {

inline UnitaryParams unitary_from_q(unsigned n, std::uint64_t q) {
  const auto f = factorize(q);
  if (f.factors().size() != 1) throw std::invalid_argument("q must be a prime power");
  return {n, f.factors()[0].prime.convert_to<std::uint64_t>(), f.factors()[0].exponent};
}

template <class T>
std::string tuple_string(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// "{a, b, c}" with elements in ascending numeric order.
inline std::string set_string(std::vector<FactoredInteger> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "}";
}

inline std::string set_string(const std::vector<std::string>& factored) {
  std::vector<FactoredInteger> v;
  for (const auto& s : factored) v.push_back(FactoredInteger::parse(s));
  return set_string(std::move(v));
}

inline std::string prime_set_string(const std::vector<BigInt>& v) {
  std::vector<FactoredInteger> f;
  for (const auto& p : v) f.push_back(FactoredInteger::prime_power(p, 1));
  return set_string(std::move(f));
}

inline std::string normalized_order(const char* printed) { return FactoredInteger::parse(printed).to_string(); }

}  // namespace detail

inline DegreePattern u_pattern(const UnitaryParams& u) {
  const Spectrum s = u.n == 3 ? mu_U3(u.p, u.k) : mu_U4(u.p, u.k);
  return degree_pattern(build_gk(s, order_U(u)));
}

/// Orders, mu and degree patterns of U_3(q).
inline std::vector<TableRow> table_u3() {
  std::vector<TableRow> out;
  for (const auto& row : printed::u3_rows()) {
    const auto u = detail::unitary_from_q(3, row.q);
    const auto order = order_U(u);
    const auto mu = mu_U3(u.p, u.k);
    out.push_back({u.label(),
                   {{"order", detail::normalized_order(row.order), order.to_string()},
                    {"mu", detail::set_string(row.mu), detail::set_string(mu.mu)},
                    {"pattern", detail::tuple_string(row.pattern),
                     detail::tuple_string(degree_pattern(build_gk(mu, order)))}}});
  }
  return out;
}

/// Ascending degree sequences of U_3(q) and the d_1 + d_{d_1+2} <= n - 3 test.
inline std::vector<TableRow> table_u3_sequences() {
  std::vector<TableRow> out;
  for (const auto& row : printed::u3_sequence_rows()) {
    const auto u = detail::unitary_from_q(3, row.q);
    auto seq = u_pattern(u);
    std::sort(seq.begin(), seq.end());
    const unsigned d1 = seq[0];
    const unsigned dd = seq.at(d1 + 1);
    const auto n3 = static_cast<unsigned>(seq.size()) - 3;
    out.push_back({u.label(),
                   {{"sequence", detail::tuple_string(row.ascending), detail::tuple_string(seq)},
                    {"d_1", std::to_string(row.d1), std::to_string(d1)},
                    {"d_{d_1+2}", std::to_string(row.d_d1_plus_2), std::to_string(dd)},
                    {"|pi|-3", std::to_string(row.n_minus_3), std::to_string(n3)},
                    {"t>=3", "certified", to_string(t_ge3_by_sequence(seq))}}});
  }
  return out;
}

inline TableRow table_u4_row(const printed::U4Row& row) {
  const auto u = detail::unitary_from_q(4, row.q);
  return {u.label(),
          {{"order", detail::normalized_order(row.order), order_U(u).to_string()},
           {"pattern", detail::tuple_string(row.pattern), detail::tuple_string(u_pattern(u))}}};
}

/// Orders and degree patterns of U_4(q), 9 <= q <= 97.
inline std::vector<TableRow> table_u4(bool parallel = false) {
  const auto& rows = printed::u4_rows();
  std::vector<TableRow> out;
  if (!parallel) {
    for (const auto& row : rows) out.push_back(table_u4_row(row));
    return out;
  }
  std::vector<std::future<TableRow>> jobs;
  for (const auto& row : rows) jobs.push_back(std::async(std::launch::async, [&row] { return table_u4_row(row); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

/// pi = R_4(q) u R_6(q): the primes outside the 2-component's reach that the
/// kernel argument keeps out of the soluble radical.
inline std::vector<BigInt> derived_pi_set(std::uint64_t q) {
  auto pi = primitive_prime_divisors(BigInt(q), 4);
  const auto r6 = primitive_prime_divisors(BigInt(q), 6);
  pi.insert(pi.end(), r6.begin(), r6.end());
  std::sort(pi.begin(), pi.end());
  return pi;
}

inline std::vector<TableRow> table_u4_pi() {
  std::vector<TableRow> out;
  for (const auto& row : printed::u4_pi_rows()) {
    const auto u = detail::unitary_from_q(4, row.q);
    std::vector<BigInt> printed_pi(row.pi.begin(), row.pi.end());
    out.push_back({u.label(),
                   {{"order", detail::normalized_order(row.order), order_U(u).to_string()},
                    {"pi", detail::prime_set_string(printed_pi), detail::prime_set_string(derived_pi_set(row.q))}}});
  }
  return out;
}

/// Plain-text rendering; with `diff`, mismatching cells show both values.
inline std::string render(const std::vector<TableRow>& rows, bool diff) {
  std::ostringstream os;
  if (rows.empty()) return "";
  os << "group";
  for (const auto& c : rows[0].cells) os << " | " << c.column;
  if (diff) os << " | diff";
  os << '\n';
  for (const auto& r : rows) {
    os << r.group;
    std::vector<std::string> bad;
    for (const auto& c : r.cells) {
      os << " | " << c.computed;
      if (!c.matches()) bad.push_back(c.column + ": printed " + c.printed + ", computed " + c.computed);
    }
    if (diff) {
      os << " | ";
      if (bad.empty()) os << "ok";
      for (std::size_t i = 0; i < bad.size(); ++i) os << (i ? "; " : "") << bad[i];
    }
    os << '\n';
  }
  return os.str();
}

/// Mismatching cells as "group/column".
inline std::vector<std::string> mismatches(const std::vector<TableRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      if (!c.matches()) out.push_back(r.group + "/" + c.column);
  return out;
}

}  // namespace odc
