#include <gtest/gtest.h>

#include <map>
#include <sstream>
#include <set>

#include "odc/graph.hpp"
#include "odc/unitary.hpp"

using odc::BigInt;
using odc::DegreePattern;
using odc::PrimeGraph;
using odc::Verdict;

namespace {

// Every labelled graph on n <= 7 vertices, once. For each degree tuple:
// how many graphs realize it, the union of their edge sets (bit per pair),
// and whether all of them have an independent triple.
struct Realized {
  std::size_t count = 0;
  std::uint32_t edge_union = 0;
  bool all_alpha3 = true;
};

std::vector<std::pair<int, int>> pairs_of(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

const std::map<std::vector<int>, Realized>& brute(int n) {
  static std::map<int, std::map<std::vector<int>, Realized>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  auto& out = memo[n];
  const auto pairs = pairs_of(n);
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t m = 0; m < total; ++m) {
    std::vector<int> deg(n, 0);
    std::vector<unsigned> adj(n, 0);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((m >> b) & 1) {
        auto [i, j] = pairs[b];
        ++deg[i], ++deg[j];
        adj[i] |= 1u << j, adj[j] |= 1u << i;
      }
    bool triple = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (!((adj[a] >> b) & 1) && !((adj[a] >> c) & 1) && !((adj[b] >> c) & 1)) triple = true;
    auto& r = out[deg];
    ++r.count;
    r.edge_union |= m;
    r.all_alpha3 = r.all_alpha3 && triple;
  }
  return out;
}

// All tuples of length n over 0..maxv.
template <class F>
void for_each_tuple(int n, int maxv, F f) {
  std::vector<int> t(n, 0);
  while (true) {
    f(t);
    int i = 0;
    while (i < n && t[i] == maxv) t[i++] = 0;
    if (i == n) return;
    ++t[i];
  }
}

PrimeGraph graph_of(const std::vector<int>& vs, const std::vector<std::pair<int, int>>& es) {
  std::vector<BigInt> v(vs.begin(), vs.end());
  PrimeGraph g(v);
  for (auto [a, b] : es) g.add_edge(g.require_index(a), g.require_index(b));
  return g;
}

PrimeGraph gk_u(unsigned n, std::uint64_t p, unsigned k) {
  const odc::UnitaryParams u(n, p, k);
  return odc::build_gk(n == 3 ? odc::mu_U3(p, k) : odc::mu_U4(p, k), odc::order_U(u));
}

}  // namespace

TEST(PrimeGraphT, Construction) {
  EXPECT_THROW(PrimeGraph({BigInt(3), BigInt(2)}), std::invalid_argument);
  auto g = graph_of({2, 3, 5}, {{2, 3}});
  EXPECT_TRUE(g.adjacent(BigInt(2), BigInt(3)));
  EXPECT_FALSE(g.adjacent(BigInt(3), BigInt(5)));
  EXPECT_THROW(g.require_index(7), std::invalid_argument);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  g.remove_edge(0, 1);
  EXPECT_TRUE(g.edges().empty());
}

TEST(BuildGK, U4TwoAndU331) {
  const auto g = gk_u(4, 2, 1);
  EXPECT_EQ(degree_pattern(g), (DegreePattern{1, 1, 0}));
  const auto h = gk_u(3, 31, 1);
  EXPECT_EQ(h.vertices(), (std::vector<BigInt>{2, 3, 5, 7, 19, 31}));
  EXPECT_EQ(degree_pattern(h), (DegreePattern{3, 2, 2, 1, 1, 1}));
  const odc::Spectrum bad{{odc::factorize(11)}, false};
  EXPECT_THROW(odc::build_gk(bad, odc::order_U({4, 2, 1})), std::invalid_argument);
}

TEST(DmSet, Basics) {
  const auto g = gk_u(3, 31, 1);
  EXPECT_EQ(odc::d_m_set(g, 1), (std::vector<BigInt>{7, 19, 31}));
  EXPECT_TRUE(odc::d_m_set(g, 5).empty());
  EXPECT_THROW(odc::d_m_set(g, 6), std::out_of_range);
}

TEST(Independence, SmallGraphs) {
  const auto path = graph_of({2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}});
  EXPECT_EQ(odc::independence_number(path), 2u);
  EXPECT_EQ(odc::t_r(path, 2), 2u);
  const auto u331 = gk_u(3, 31, 1);
  // 31 only meets 2, so {3, 31, 7} is independent
  EXPECT_EQ(odc::independence_number(u331), 3u);
  EXPECT_EQ(odc::t_r(u331, 2), 2u);
  EXPECT_EQ(odc::independence_number(gk_u(4, 3, 1)), 3u);
}

TEST(IsGraphic, Examples) {
  EXPECT_FALSE(odc::is_graphic(std::vector<int>{3, 3, 3, 1}));
  EXPECT_TRUE(odc::is_graphic(std::vector<int>{3, 3, 2, 2, 2}));
  EXPECT_TRUE(odc::is_graphic(std::vector<int>{}));
  EXPECT_FALSE(odc::is_graphic(std::vector<int>{1}));
  EXPECT_THROW(odc::is_graphic(std::vector<int>{1, -1}), std::invalid_argument);
}

TEST(IsGraphic, AgreesWithExhaustiveSearch) {
  for (int n = 1; n <= 6; ++n) {
    const auto& real = brute(n);
    for_each_tuple(n, 6, [&](const std::vector<int>& t) {
      ASSERT_EQ(odc::is_graphic(t), real.count(t) > 0) << n;
    });
  }
}

TEST(ForcedNonadjacent, NeverContradictedByARealization) {
  for (int n = 2; n <= 6; ++n) {
    const auto pairs = pairs_of(n);
    for (const auto& [t, r] : brute(n)) {
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const bool forced = odc::forced_nonadjacent(t, pairs[b].first, pairs[b].second);
        const bool ever_adjacent = (r.edge_union >> b) & 1;
        ASSERT_FALSE(forced && ever_adjacent);
      }
    }
  }
}

TEST(ForcedNonadjacent, Preconditions) {
  EXPECT_THROW(odc::forced_nonadjacent(std::vector<int>{1, 1}, 1, 0), std::invalid_argument);
  EXPECT_THROW(odc::forced_nonadjacent(std::vector<int>{3, 3, 3, 1}, 0, 1), std::invalid_argument);
  EXPECT_TRUE(odc::forced_nonadjacent(std::vector<int>{1, 1, 0}, 0, 2));
}

TEST(ForcedNonadjacent, AgreesWithActualU4Graphs) {
  // whenever the degree sequence alone forces a non-edge, the real graph agrees
  std::size_t forced_total = 0;
  for (std::uint64_t q : {5, 7, 9, 11, 13, 17, 19, 23, 25, 29, 31}) {
    const auto f = odc::factorize(q).factors()[0];
    const auto g = gk_u(4, f.prime.convert_to<std::uint64_t>(), f.exponent);
    const auto seq = degree_pattern(g);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (odc::forced_nonadjacent(seq, i, j)) {
          ++forced_total;
          EXPECT_FALSE(g.adjacent(i, j)) << q;
        }
  }
  EXPECT_GT(forced_total, 0u);
}

TEST(Connectivity, ByDegrees) {
  EXPECT_EQ(odc::connected_by_degrees(DegreePattern{3, 2, 3, 1, 1}), Verdict::certified);
  EXPECT_EQ(odc::connected_by_degrees(DegreePattern{1, 1, 1, 1}), Verdict::inconclusive);
}

TEST(Connectivity, CertifiedImpliesConnectedOnAllSmallGraphs) {
  for (int n = 2; n <= 6; ++n) {
    const auto pairs = pairs_of(n);
    std::vector<BigInt> vs;
    for (int i = 0; i < n; ++i) vs.push_back(i + 2);
    for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
      PrimeGraph g(vs);
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((m >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
      if (odc::connected_by_degrees(g) == Verdict::certified) {
        ASSERT_EQ(odc::components(g).size(), 1u);
      }
      // the first two structural checks hold for every graph
      for (const auto& v : odc::d0_component_check(g))
        ASSERT_EQ(v.find("clique"), v.size() - 6) << v;
    }
  }
}

TEST(AlphaPair, Examples) {
  const auto g = graph_of({2, 3, 5, 7, 11}, {{2, 3}, {5, 7}});
  EXPECT_EQ(odc::alpha_ge3_by_pair(g, 2, 5), Verdict::certified);  // 1 + 1 <= 2
  EXPECT_THROW(odc::alpha_ge3_by_pair(g, 2, 3), std::invalid_argument);
  EXPECT_THROW(odc::alpha_ge3_by_pair(g, 2, 2), std::invalid_argument);
  const auto c4 = graph_of({2, 3, 5, 7}, {{2, 3}, {3, 5}, {5, 7}, {2, 7}});
  EXPECT_EQ(odc::alpha_ge3_by_pair(c4, 2, 5), Verdict::inconclusive);
}

TEST(TBySequence, Examples) {
  EXPECT_EQ(odc::t_ge3_by_sequence({1, 1, 1, 2, 2, 3}), Verdict::certified);
  EXPECT_EQ(odc::t_ge3_by_sequence({1, 1, 2, 2}), Verdict::inconclusive);
  EXPECT_THROW(odc::t_ge3_by_sequence({2, 1, 1}), std::invalid_argument);
  EXPECT_THROW(odc::t_ge3_by_sequence({2, 2, 2}), std::invalid_argument);
}

TEST(TBySequence, SoundOnAllSmallSequences) {
  for (int n = 3; n <= 7; ++n)
    for (const auto& [t, r] : brute(n)) {
      DegreePattern d(t.begin(), t.end());
      if (!std::is_sorted(d.begin(), d.end()) || d[0] + 2 > d.size()) continue;
      if (odc::t_ge3_by_sequence(d) == Verdict::certified) {
        ASSERT_TRUE(r.all_alpha3);
      }
    }
}

TEST(Realizations, CountsMatchExhaustive) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& [t, r] : brute(n)) {
      std::size_t count = 0;
      odc::for_each_realization(std::vector<unsigned>(t.begin(), t.end()), [&](const auto&) {
        ++count;
        return true;
      });
      ASSERT_EQ(count, r.count);
      std::size_t seen = 0;
      const auto v = odc::alpha_ge3_all_realizations(DegreePattern(t.begin(), t.end()), &seen);
      ASSERT_EQ(v == Verdict::certified, r.all_alpha3);
      if (r.all_alpha3) {
        ASSERT_EQ(seen, r.count);
      }
    }
  std::size_t none = 0;
  EXPECT_EQ(odc::alpha_ge3_all_realizations({3, 3, 3, 1}, &none), Verdict::inconclusive);
  EXPECT_EQ(none, 0u);
}

TEST(D0Check, CliqueRule) {
  EXPECT_TRUE(odc::d0_component_check(gk_u(3, 31, 1)).empty());
  EXPECT_TRUE(odc::d0_component_check(gk_u(4, 3, 1)).empty());
  const auto bad = graph_of({2, 3, 5, 7, 11}, {{2, 3}, {5, 7}, {7, 11}});
  EXPECT_EQ(odc::d0_component_check(bad).size(), 2u);  // 5 and 11
}

TEST(Dot, PlainAndCompact) {
  const auto g = gk_u(3, 61, 1);
  auto nodes = [](const std::string& dot) {
    std::size_t n = 0;
    std::istringstream is(dot);
    for (std::string line; std::getline(is, line);)
      if (line.find("--") == std::string::npos && line.find('"') != std::string::npos) ++n;
    return n;
  };
  const auto plain = odc::export_dot(g, false);
  EXPECT_EQ(nodes(plain), 7u);
  EXPECT_EQ(plain, odc::export_dot(g, false));
  const auto compact = odc::export_dot(g, true, odc::class_hints({3, 61, 1}));
  EXPECT_EQ(nodes(compact), 6u);
  EXPECT_NE(compact.find("\"7,523\";"), std::string::npos);
  // without hints 2 ~ 31 and 3 ~ 5 are closed twins as well
  const auto loose = odc::export_dot(g, true);
  EXPECT_EQ(nodes(loose), 4u);
  EXPECT_NE(loose.find("\"2,31\";"), std::string::npos);
  EXPECT_NE(loose.find("\"3,5\";"), std::string::npos);
}
