#pragma once

// Prime graphs GK(G) and the degree-sequence criteria used on them.
//
// Vertices are primes in ascending order; adjacency is a 64-bit row mask per
// vertex, which is plenty for the graphs in scope (at most ten vertices).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "odc/arith.hpp"
#include "odc/unitary.hpp"

namespace odc {

/// Sufficiency-only criteria never refute; they certify or stay silent.
enum class Verdict { certified, inconclusive };

inline const char* to_string(Verdict v) {
  return v == Verdict::certified ? "certified" : "inconclusive";
}

using Mask = std::uint64_t;

class PrimeGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  PrimeGraph() = default;
  explicit PrimeGraph(std::vector<BigInt> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() > kMaxVertices) throw std::length_error("too many vertices");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
      if (!(vertices_[i - 1] < vertices_[i]))
        throw std::invalid_argument("vertices must be strictly ascending");
    adj_.assign(vertices_.size(), 0);
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<BigInt>& vertices() const { return vertices_; }
  const BigInt& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> index_of(const BigInt& r) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), r);
    if (it == vertices_.end() || *it != r) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::size_t require_index(const BigInt& r) const {
    auto i = index_of(r);
    if (!i) throw std::invalid_argument("not a vertex: " + r.str());
    return *i;
  }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("self-loop");
    adj_.at(i) |= Mask{1} << j;
    adj_.at(j) |= Mask{1} << i;
  }
  void remove_edge(std::size_t i, std::size_t j) {
    adj_.at(i) &= ~(Mask{1} << j);
    adj_.at(j) &= ~(Mask{1} << i);
  }

  bool adjacent(std::size_t i, std::size_t j) const { return (adj_.at(i) >> j) & 1; }
  bool adjacent(const BigInt& a, const BigInt& b) const {
    return adjacent(require_index(a), require_index(b));
  }
  Mask neighbors(std::size_t i) const { return adj_.at(i); }
  unsigned degree(std::size_t i) const { return static_cast<unsigned>(std::popcount(adj_.at(i))); }
  Mask all() const { return vertices_.size() == 64 ? ~Mask{0} : (Mask{1} << vertices_.size()) - 1; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;

 private:
  std::vector<BigInt> vertices_;
  std::vector<Mask> adj_;
};

/// GK(G) from mu(G): p ~ r iff p*r divides some element of mu.
inline PrimeGraph build_gk(const Spectrum& s, const FactoredInteger& order) {
  PrimeGraph g(order.primes());
  for (const auto& m : s.mu) {
    if (!m.divides(order))
      throw std::invalid_argument("element order " + m.to_string() + " does not divide |G|");
    const auto ps = m.primes();
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        g.add_edge(g.require_index(ps[i]), g.require_index(ps[j]));
  }
  return g;
}

using DegreePattern = std::vector<unsigned>;

inline DegreePattern degree_pattern(const PrimeGraph& g) {
  DegreePattern out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.degree(i));
  return out;
}

/// D_m(G): the vertices of degree exactly m.
inline std::vector<BigInt> d_m_set(const PrimeGraph& g, unsigned m) {
  if (g.size() == 0 || m > g.size() - 1) throw std::out_of_range("m outside [0, |V|-1]");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.degree(i) == m) out.push_back(g.vertex(i));
  return out;
}

/// Component masks, the one containing 2 first, the rest by least prime.
inline std::vector<Mask> component_masks(const PrimeGraph& g) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if ((seen >> i) & 1) continue;
    Mask comp = Mask{1} << i, frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  // vertices ascend, so component order by lowest bit is order by least
  // prime, and 2 (if present) is vertex 0
  return out;
}

inline std::vector<BigInt> members(const PrimeGraph& g, Mask m) {
  std::vector<BigInt> out;
  for (; m; m &= m - 1) out.push_back(g.vertex(std::countr_zero(m)));
  return out;
}

inline std::vector<std::vector<BigInt>> components(const PrimeGraph& g) {
  std::vector<std::vector<BigInt>> out;
  for (Mask m : component_masks(g)) out.push_back(members(g, m));
  return out;
}

namespace detail {

inline unsigned alpha_rec(const PrimeGraph& g, Mask cand, unsigned cur, unsigned best) {
  if (cand == 0) return std::max(cur, best);
  if (cur + static_cast<unsigned>(std::popcount(cand)) <= best) return best;
  const auto v = static_cast<std::size_t>(std::countr_zero(cand));
  const Mask rest = cand & ~(Mask{1} << v);
  best = alpha_rec(g, rest & ~g.neighbors(v), cur + 1, best);  // take v
  return alpha_rec(g, rest, cur, best);                          // skip v
}

}  // namespace detail

/// alpha restricted to the vertex subset `within`.
inline unsigned independence_number(const PrimeGraph& g, Mask within) {
  return detail::alpha_rec(g, within & g.all(), 0, 0);
}

/// t(G) = alpha(GK(G)).
inline unsigned independence_number(const PrimeGraph& g) { return independence_number(g, g.all()); }

/// t(r, G): largest independent set containing r.
inline unsigned t_r(const PrimeGraph& g, const BigInt& r) {
  const std::size_t i = g.require_index(r);
  const Mask rest = g.all() & ~g.neighbors(i) & ~(Mask{1} << i);
  return 1 + independence_number(g, rest);
}

/// Erdos-Gallai test on the sorted sequence.
inline bool is_graphic(std::vector<int> seq) {
  for (int d : seq)
    if (d < 0) throw std::invalid_argument("degree sequence entries must be nonnegative");
  std::sort(seq.begin(), seq.end(), std::greater<>());
  const auto n = static_cast<long long>(seq.size());
  long long total = 0;
  for (int d : seq) total += d;
  if (total % 2) return false;
  if (n > 0 && seq[0] > n - 1) return false;
  long long lhs = 0;
  for (long long k = 1; k <= n; ++k) {
    lhs += seq[k - 1];
    long long rhs = k * (k - 1);
    for (long long i = k; i < n; ++i) rhs += std::min<long long>(seq[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

inline bool is_graphic(const DegreePattern& seq) {
  return is_graphic(std::vector<int>(seq.begin(), seq.end()));
}

/// True when v_i and v_j are nonadjacent in every realization because the
/// sequence with d_i and d_j both lowered by one is not graphic. Indices are
/// 0-based positions in the caller's sequence.
inline bool forced_nonadjacent(const std::vector<int>& seq, std::size_t i, std::size_t j) {
  if (!(i < j) || j >= seq.size()) throw std::invalid_argument("need indices i < j < n");
  if (!is_graphic(seq)) throw std::invalid_argument("sequence is not graphic");
  if (seq[i] == 0 || seq[j] == 0) return true;
  std::vector<int> reduced = seq;
  --reduced[i];
  --reduced[j];
  return !is_graphic(reduced);
}

inline bool forced_nonadjacent(const DegreePattern& seq, std::size_t i, std::size_t j) {
  return forced_nonadjacent(std::vector<int>(seq.begin(), seq.end()), i, j);
}

/// Max degree + min degree >= n - 1 forces connectivity.
inline Verdict connected_by_degrees(const DegreePattern& seq) {
  if (seq.empty()) return Verdict::certified;
  const auto [lo, hi] = std::minmax_element(seq.begin(), seq.end());
  return *lo + *hi + 1 >= seq.size() ? Verdict::certified : Verdict::inconclusive;
}

inline Verdict connected_by_degrees(const PrimeGraph& g) {
  return connected_by_degrees(degree_pattern(g));
}

/// Two nonadjacent vertices with deg u + deg v <= n - 3 leave a third vertex
/// adjacent to neither, so alpha >= 3.
inline Verdict alpha_ge3_by_pair(const PrimeGraph& g, const BigInt& u, const BigInt& v) {
  const std::size_t i = g.require_index(u), j = g.require_index(v);
  if (i == j || g.adjacent(i, j)) throw std::invalid_argument("vertices must be distinct and nonadjacent");
  const long long n = static_cast<long long>(g.size());
  return static_cast<long long>(g.degree(i) + g.degree(j)) <= n - 3 ? Verdict::certified
                                                                     : Verdict::inconclusive;
}

/// For an ascending degree sequence d_1 <= ... <= d_n, d_1 + d_{d_1+2} <= n - 3
/// gives t(G) >= 3 (indices 1-based).
inline Verdict t_ge3_by_sequence(const DegreePattern& ascending) {
  if (!std::is_sorted(ascending.begin(), ascending.end()))
    throw std::invalid_argument("sequence must be ascending");
  const std::size_t n = ascending.size();
  if (n == 0 || ascending[0] + 2 > n) throw std::invalid_argument("d_1 + 2 exceeds n");
  const unsigned d1 = ascending[0];
  const unsigned dd = ascending[d1 + 1];
  return d1 + dd + 3 <= n ? Verdict::certified : Verdict::inconclusive;
}

/// Structural facts every prime graph must satisfy; returns the violations.
///   - p has degree 0 iff {p} is a component;
///   - if |D_m| <= m for every m the graph is connected;
///   - every component other than the first is a clique.
inline std::vector<std::string> d0_component_check(const PrimeGraph& g) {
  std::vector<std::string> bad;
  const auto comps = component_masks(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool singleton =
        std::find(comps.begin(), comps.end(), Mask{1} << i) != comps.end();
    if ((g.degree(i) == 0) != singleton)
      bad.push_back("degree-0 / singleton mismatch at " + g.vertex(i).str());
  }
  bool all_small = g.size() > 0;
  for (unsigned m = 0; m < g.size(); ++m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.size(); ++i) count += g.degree(i) == m;
    if (count > m) all_small = false;
  }
  if (all_small && comps.size() > 1) bad.push_back("|D_m| <= m for all m but graph disconnected");
  for (std::size_t c = 1; c < comps.size(); ++c) {
    const auto sz = static_cast<unsigned>(std::popcount(comps[c]));
    for (Mask m = comps[c]; m; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (g.degree(v) != sz - 1)
        bad.push_back("component member " + g.vertex(v).str() + " is not in a clique");
    }
  }
  return bad;
}

/// Calls visit on every labelled graph whose degrees are exactly seq (vertex
/// i gets degree seq[i]); stops early when visit returns false.
inline void for_each_realization(const std::vector<unsigned>& seq,
                                 const std::function<bool(const std::vector<Mask>&)>& visit) {
  const std::size_t n = seq.size();
  if (n > PrimeGraph::kMaxVertices) throw std::length_error("sequence too long");
  std::vector<Mask> adj(n, 0);
  std::vector<unsigned> need(seq);
  bool stop = false;
  // Decide the edges of vertex i towards j > i, then move on.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (stop) return;
    if (i == n) {
      if (!visit(adj)) stop = true;
      return;
    }
    if (j == n) {
      if (need[i] == 0) rec(i + 1, i + 2);
      return;
    }
    // remaining capacity among j..n-1 must cover need[i]
    if (need[i] > n - j) return;
    if (need[i] > 0 && need[j] > 0) {
      --need[i];
      --need[j];
      adj[i] |= Mask{1} << j;
      adj[j] |= Mask{1} << i;
      rec(i, j + 1);
      adj[i] &= ~(Mask{1} << j);
      adj[j] &= ~(Mask{1} << i);
      ++need[i];
      ++need[j];
    }
    rec(i, j + 1);
  };
  if (n == 0) {
    visit(adj);
    return;
  }
  rec(0, 1);
}

/// Exhaustive fallback: alpha >= 3 in every realization of seq.
inline Verdict alpha_ge3_all_realizations(const DegreePattern& seq, std::size_t* count = nullptr) {
  std::size_t seen = 0;
  bool ok = true;
  for_each_realization(seq, [&](const std::vector<Mask>& adj) {
    ++seen;
    // any independent triple?
    const std::size_t n = adj.size();
    bool triple = false;
    for (std::size_t a = 0; a < n && !triple; ++a)
      for (std::size_t b = a + 1; b < n && !triple; ++b) {
        if ((adj[a] >> b) & 1) continue;
        const Mask common = ~adj[a] & ~adj[b] & (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
        const Mask later = common & ~((Mask{2} << b) - 1);
        if (later) triple = true;
      }
    if (!triple) ok = false;
    return ok;
  });
  if (count) *count = seen;
  return ok && seen > 0 ? Verdict::certified : Verdict::inconclusive;
}

/// Class hints for compact export: vertices are only merged inside one hint
/// class. Without hints every vertex may merge with any other.
using ClassHints = std::vector<std::vector<BigInt>>;

/// Graphviz text. In compact mode vertices with equal closed neighbourhoods
/// (hence mutually adjacent) that share a hint class collapse to one node.
inline std::string export_dot(const PrimeGraph& g, bool compact, const ClassHints& hints = {},
                              const std::string& name = "GK") {
  const std::size_t n = g.size();
  std::vector<std::size_t> cls(n, 0);
  if (!hints.empty()) {
    std::vector<bool> covered(n, false);
    for (std::size_t c = 0; c < hints.size(); ++c)
      for (const auto& r : hints[c])
        if (auto i = g.index_of(r)) {
          cls[*i] = c + 1;
          covered[*i] = true;
        }
    std::size_t next = hints.size() + 1;
    for (std::size_t i = 0; i < n; ++i)
      if (!covered[i]) cls[i] = next++;
  }
  // group representative for every vertex
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep[i] = i;
    if (!compact) continue;
    const Mask closed_i = g.neighbors(i) | (Mask{1} << i);
    for (std::size_t j = 0; j < i; ++j) {
      const Mask closed_j = g.neighbors(j) | (Mask{1} << j);
      if (rep[j] == j && cls[j] == cls[i] && closed_i == closed_j) {
        rep[i] = j;
        break;
      }
    }
  }
  auto node_name = [&](std::size_t r) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      if (rep[i] != r) continue;
      if (!s.empty()) s += ",";
      s += g.vertex(i).str();
    }
    return s;
  };
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < n; ++i)
    if (rep[i] == i) os << "  \"" << node_name(i) << "\";\n";
  std::vector<std::pair<std::size_t, std::size_t>> quotient;
  for (auto [i, j] : g.edges()) {
    auto a = rep[i], b = rep[j];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    quotient.emplace_back(a, b);
  }
  std::sort(quotient.begin(), quotient.end());
  quotient.erase(std::unique(quotient.begin(), quotient.end()), quotient.end());
  for (auto [a, b] : quotient) os << "  \"" << node_name(a) << "\" -- \"" << node_name(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace odc
