#pragma once

// Published values, transcribed verbatim (misprints included) so the
// computed tables can be diffed against an independent source. Nothing in
// here is derived; see tables.hpp for the computations.

#include <cstdint>
#include <string>
#include <vector>

namespace odc::printed {

struct U3Row {
  std::uint64_t q;
  const char* order;
  std::vector<std::string> mu;
  std::vector<unsigned> pattern;
};

// Orders, maximal element orders and degree patterns of U_3(q).
inline const std::vector<U3Row>& u3_rows() {
  static const std::vector<U3Row> rows = {
      {31, "2^11*3*5*7^2*19*31^3", {"7^2*19", "2^6*3*5", "2^5*31"}, {3, 2, 2, 1, 1, 1}},
      {37, "2^4*3^2*19^2*31*37^3*43", {"31*43", "2^3*3^2*19", "2*19*37"}, {3, 2, 3, 1, 2, 1}},
      {43, "2^5*3*7*11^2*13*43^3*139", {"13*139", "2^3*3*7*11", "2^2*11*43"}, {4, 3, 3, 4, 1, 2, 1}},
      {47, "2^9*3^2*7*23*47^3*103", {"7*103", "2^5*23", "2^4*47", "2^4*3"}, {3, 1, 1, 1, 1, 1}},
      {49, "2^6*3*5^4*7^6*13*181", {"13*181", "2^5*3*5^2", "2*5^2*7"}, {3, 2, 3, 2, 1, 1}},
      {59, "2^5*3^2*5^2*7*29*59^3*163", {"7*163", "2^3*5*29", "2^2*5*59", "2^2*3*5"}, {4, 2, 4, 1, 2, 2, 1}},
      {61, "2^4*3*5*7*31^2*61^3*523", {"7*523", "2^3*3*5*31", "2*31*61"}, {4, 3, 3, 1, 4, 2, 1}},
      {64, "2^18*3^2*5^2*7*13^2*37*109", {"37*109", "3^2*5*7*13", "2*5*13"}, {2, 3, 4, 3, 4, 1, 1}},
      {73, "2^5*3^2*7*37^2*73^3*751", {"7*751", "2^4*3^2*37", "2*37*73"}, {3, 2, 1, 3, 2, 1}},
      {89, "2^5*3^4*5^2*7*11*89^3*373", {"7*373", "2^4*3*5*11", "2*3*5*89", "2*3^2*5"}, {4, 4, 4, 1, 3, 3, 1}},
      {97, "2^7*3*7^4*67*97^3*139", {"67*139", "2^6*3*7^2", "2*7^2*97"}, {3, 2, 3, 1, 2, 1}},
  };
  return rows;
}

struct SequenceRow {
  std::uint64_t q;
  std::vector<unsigned> ascending;
  unsigned d1;
  unsigned d_d1_plus_2;
  unsigned n_minus_3;
};

// Ascending degree sequences of GK(U_3(q)) with the quantities of the
// d_1 + d_{d_1+2} <= n - 3 test.
inline const std::vector<SequenceRow>& u3_sequence_rows() {
  static const std::vector<SequenceRow> rows = {
      {31, {1, 1, 1, 2, 2, 3}, 1, 1, 3},    {37, {1, 1, 2, 2, 3, 3}, 1, 2, 3},
      {43, {1, 1, 2, 3, 3, 4, 4}, 1, 2, 4}, {47, {1, 1, 1, 1, 1, 3}, 1, 1, 3},
      {49, {1, 1, 2, 2, 3, 3}, 1, 2, 3},    {59, {1, 1, 2, 2, 2, 4}, 1, 2, 3},
      {61, {1, 1, 2, 3, 3, 4, 4}, 1, 2, 4}, {64, {1, 1, 2, 3, 3, 4, 4}, 1, 2, 4},
      {73, {1, 1, 2, 2, 3, 3}, 1, 2, 3},    {89, {1, 1, 3, 3, 4, 4, 4}, 1, 3, 4},
      {97, {1, 1, 2, 2, 3, 3}, 1, 2, 3},
  };
  return rows;
}

struct U4Row {
  std::uint64_t q;
  const char* order;
  std::vector<unsigned> pattern;
};

// Orders and degree patterns of U_4(q), 9 <= q <= 97.
inline const std::vector<U4Row>& u4_rows() {
  static const std::vector<U4Row> rows = {
      {9, "2^9*3^12*5^3*41*73", {3, 2, 3, 1, 1}},
      {11, "2^7*3^4*5^2*11^6*37*61", {3, 4, 4, 3, 1, 1}},
      {13, "2^7*3^2*5*7^3*13^6*17*157", {5, 5, 3, 4, 2, 3, 1}},
      {16, "2^24*3^2*5^2*17^3*241*257", {3, 4, 4, 4, 1, 2}},
      {17, "2^11*3^7*5*7*13*17^6*29", {4, 4, 2, 2, 2, 2, 2}},
      {19, "2^7*3^4*5^3*7^3*19^6*181", {3, 4, 4, 1, 3, 1}},
      {23, "2^10*3^4*5*11^2*13^2*23^6*53", {4, 4, 2, 5, 2, 3, 2}},
      {25, "2^9*3^2*5^12*13^3*313*601", {4, 4, 3, 4, 2, 1}},
      {27, "2^7*3^18*5*7^3*13^2*19*37*73", {3, 3, 2, 5, 5, 2, 2, 2}},
      {29, "2^7*3^4*5^3*7^2*29^6*271*421", {5, 5, 5, 5, 4, 2, 2}},
      {31, "2^16*3^2*5^2*7^2*13*19*31^6*37", {5, 5, 5, 2, 3, 2, 3, 3}},
      {32, "2^30*3^4*5^2*11^3*31^2*41*331", {3, 4, 2, 4, 5, 2, 2}},
      {37, "2^7*3^4*5*19^3*31*37^6*43*137", {5, 5, 3, 5, 2, 3, 2, 3}},
      {41, "2^9*3^4*5^2*7^3*29^2*41^6*547", {5, 5, 5, 5, 2, 4, 2}},
      {43, "2^7*3^2*5^2*7^2*11^3*13*37*43^6*139", {4, 6, 3, 6, 6, 2, 3, 4, 2}},
      {47, "2^13*3^4*5*7*13*17*23^2*47^6*103", {5, 5, 3, 3, 3, 3, 6, 3, 3}},
      {49, "2^11*3^2*5^6*7^12*13*181*1201", {4, 4, 5, 3, 2, 2, 2}},
      {53, "2^7*3^10*5*13^2*53^6*281*919", {5, 4, 3, 5, 3, 3, 1}},
      {59, "2^7*3^4*5^3*7*29^2*59^6*163*1741", {4, 6, 6, 3, 5, 4, 3, 1}},
      {61, "2^7*3^2*5^2*7*31^3*61^6*523*1861", {5, 5, 5, 2, 6, 4, 2, 1}},
      {64, "2^36*3^4*5^3*7^2*13^3*17*37*109*241", {4, 6, 6, 6, 6, 3, 3, 3, 3}},
      {67, "2^7*3^2*5*11^2*17^3*67^6*449*4423", {4, 6, 3, 6, 5, 4, 3, 1}},
      {71, "2^10*3^7*5^2*7^2*71^6*1657*2521", {5, 5, 5, 5, 4, 2, 2}},
      {73, "2^9*3^4*5*7*13*37^3*41*73^6*751", {6, 6, 4, 2, 4, 5, 4, 3, 2}},
      {79, "2^13*3^2*5^3*13^2*79^6*3121*6163", {5, 5, 5, 5, 4, 2, 2}},
      {81, "2^11*3^24*5^2*17*41^3*193*6481", {5, 3, 5, 3, 4, 3, 1}},
      {83, "2^7*3^4*5*7^3*13*41^2*53*83^6*2269", {4, 5, 3, 5, 3, 7, 3, 4, 2}},
      {89, "2^9*3^7*5^3*7*11^2*17*89^6*233*373", {6, 6, 6, 3, 6, 3, 4, 3, 3}},
      {97, "2^13*3^2*5*7^6*67*97^6*139*941", {5, 5, 3, 5, 2, 3, 2, 3}},
  };
  return rows;
}

struct PiRow {
  std::uint64_t q;
  const char* order;
  std::vector<std::uint64_t> pi;
};

// The prime sets pi for which the soluble radical is a pi'-group, U_4(q).
inline const std::vector<PiRow>& u4_pi_rows() {
  static const std::vector<PiRow> rows = {
      {49, "2^11*3^2*5^6*7^12*13*181*1201", {13, 181, 1201}},
      {59, "2^7*3^4*5^3*7*29^2*59^6*163*1741", {7, 163, 1741}},
      {61, "2^7*3^2*5^2*7*31^3*61^6*523*1861", {7, 523, 1861}},
      {67, "2^7*3^2*5*11^2*17^3*67^6*449*4423", {5, 449, 4423}},
      {71, "2^10*3^7*5^2*7^2*71^6*1657*2521", {1657, 2521}},
      {79, "2^13*3^2*5^3*13^2*79^6*3121*6163", {3121, 6163}},
      {81, "2^11*3^24*5^2*17*41^3*193*6481", {17, 193, 6481}},
      {83, "2^7*3^4*5*7^3*13*41^2*53*83^6*2269", {5, 13, 53, 2269}},
  };
  return rows;
}

struct LieCase {
  std::uint64_t q;
  std::uint64_t r;
  std::vector<std::string> groups;
};

// Lie-type groups L with r in pi(L) and pi(L) within pi(U_4(q)).
inline const std::vector<LieCase>& lie_cases() {
  static const std::vector<LieCase> cases = {
      {49, 1201, {"L_2(7^4)", "B_2(7^2)", "U_4(7^2)"}},
      {59, 1741, {"L_2(59^2)", "B_2(59)", "U_4(59)"}},
      {61, 1861, {"L_2(61^2)", "B_2(61)", "U_4(61)"}},
      {67, 4423, {"U_3(67)", "U_4(67)"}},
      {71, 2521, {"L_2(71^2)", "B_2(71)", "U_4(71)"}},
      {79, 6163, {"U_3(79)", "U_4(79)"}},
      {81, 6481, {"U_3(3^4)", "U_4(3^4)"}},
      {83, 2269, {"U_4(83)"}},
  };
  return cases;
}

// q for which h(U_3(q)) = 1 is proved by the full argument.
inline const std::vector<std::uint64_t>& u3_targets() {
  static const std::vector<std::uint64_t> v = {31, 37, 43, 47, 49, 59, 61, 64, 73, 89, 97};
  return v;
}

// Earlier results: h(U_3(q)) = 1 for these q.
inline const std::vector<std::uint64_t>& u3_known_small() {
  static const std::vector<std::uint64_t> v = {3, 4, 5, 17};
  return v;
}

// q < 100, q > 5, with |pi((q^2 - q + 1)/(3, q + 1))| = 1, hence h = 1.
inline const std::vector<std::uint64_t>& u3_single_prime_list() {
  static const std::vector<std::uint64_t> v = {7,  8,  9,  11, 13, 16, 19, 23, 25,
                                               29, 32, 41, 53, 67, 71, 79, 81, 83};
  return v;
}

// Earlier results for U_4(q): h = 1 for these q, h = 2 for q = 2.
inline const std::vector<std::uint64_t>& u4_known_h1() {
  static const std::vector<std::uint64_t> v = {3, 4, 5, 7, 8, 17};
  return v;
}

// Routes to t(G) >= 3 for U_4(q) as assigned in the argument.
inline const std::vector<std::uint64_t>& u4_route_sequence() {
  static const std::vector<std::uint64_t> v = {13, 17, 27, 31, 37, 43, 47, 53, 59, 61, 67, 73, 81, 83, 97};
  return v;
}
inline const std::vector<std::uint64_t>& u4_route_min_degree() {
  static const std::vector<std::uint64_t> v = {9, 11, 19, 23, 32, 49, 64, 89};
  return v;
}
inline const std::vector<std::uint64_t>& u4_route_low_pair() {
  static const std::vector<std::uint64_t> v = {16, 25, 29, 41, 71, 79};
  return v;
}

// q handled by the divisibility scan, and q handled by the Lie-type scan.
inline const std::vector<std::uint64_t>& u4_scan_by_order() {
  static const std::vector<std::uint64_t> v = {9,  11, 13, 16, 17, 19, 23, 25, 27, 29, 31,
                                               32, 37, 41, 43, 47, 53, 64, 73, 89, 97};
  return v;
}
inline const std::vector<std::uint64_t>& u4_scan_by_lie_type() {
  static const std::vector<std::uint64_t> v = {49, 59, 61, 67, 71, 79, 81, 83};
  return v;
}

}  // namespace odc::printed
