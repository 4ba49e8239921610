#pragma once

// OD-characterization certificates for U_3(q) and U_4(q).
//
// A certificate is a chain of steps. Each step names a rule and records every
// number the rule looks at; evaluate() decides the step from those inputs
// alone, so replay() can re-check a certificate read back from JSON without
// the pipeline that produced it. Group-theoretic theorems (the structure
// theorem for t(G) >= 3, the kernel argument, recognition by order
// components) enter as axiom steps whose numeric premises are checked.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "odc/catalog.hpp"
#include "odc/graph.hpp"
#include "odc/printed.hpp"
#include "odc/tables.hpp"
#include "odc/unitary.hpp"

namespace odc {

using Json = nlohmann::ordered_json;

enum class Rule {
  OrderPattern,
  Connectivity,
  TGe3,
  T2Ge2,
  VasilievHypothesis,
  PiPrimeKernel,
  CandidateScan,
  LieScan,
  OuterExclusion,
  OrderComponents,
  LiteratureConstant,
};

inline constexpr Rule kAllRules[] = {Rule::OrderPattern,   Rule::Connectivity,      Rule::TGe3,
                                     Rule::T2Ge2,          Rule::VasilievHypothesis, Rule::PiPrimeKernel,
                                     Rule::CandidateScan,  Rule::LieScan,           Rule::OuterExclusion,
                                     Rule::OrderComponents, Rule::LiteratureConstant};

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::OrderPattern: return "OrderPattern";
    case Rule::Connectivity: return "Connectivity";
    case Rule::TGe3: return "TGe3";
    case Rule::T2Ge2: return "T2Ge2";
    case Rule::VasilievHypothesis: return "VasilievHypothesis";
    case Rule::PiPrimeKernel: return "PiPrimeKernel";
    case Rule::CandidateScan: return "CandidateScan";
    case Rule::LieScan: return "LieScan";
    case Rule::OuterExclusion: return "OuterExclusion";
    case Rule::OrderComponents: return "OrderComponents";
    case Rule::LiteratureConstant: return "LiteratureConstant";
  }
  return "?";
}

inline Rule rule_from_string(const std::string& s) {
  for (Rule r : kAllRules)
    if (s == to_string(r)) return r;
  throw std::invalid_argument("unknown rule '" + s + "'");
}

enum class Outcome { certified, inconclusive, refuted };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::certified: return "certified";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::refuted: return "refuted";
  }
  return "?";
}

inline Outcome outcome_from_string(const std::string& s) {
  if (s == "certified") return Outcome::certified;
  if (s == "inconclusive") return Outcome::inconclusive;
  if (s == "refuted") return Outcome::refuted;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

struct Step {
  Rule rule;
  std::string anchor;
  Json inputs;
  Outcome outcome = Outcome::inconclusive;

  // U_3 proofs split on the pi_2 pair; steps inside a branch carry "case".
  std::string branch() const { return inputs.contains("case") ? inputs["case"].get<std::string>() : ""; }
};

struct Conclusion {
  enum class Kind { od_characterizable, k_fold, inconclusive };
  Kind kind = Kind::inconclusive;
  unsigned h = 0;                // 0 when unknown
  std::string source;            // "derived" or "literature"
  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

inline const char* to_string(Conclusion::Kind k) {
  switch (k) {
    case Conclusion::Kind::od_characterizable: return "od_characterizable";
    case Conclusion::Kind::k_fold: return "k_fold";
    case Conclusion::Kind::inconclusive: return "inconclusive";
  }
  return "?";
}

struct Certificate {
  UnitaryParams target;
  FactoredInteger order;
  std::vector<FactoredInteger> mu;
  DegreePattern pattern;
  std::vector<Step> steps;
  Conclusion verdict;

  const Step* find(Rule r, const std::string& branch = "") const {
    for (const auto& s : steps)
      if (s.rule == r && (branch.empty() || s.branch() == branch)) return &s;
    return nullptr;
  }
};

namespace detail {

inline Json primes_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_u64(p));
  return a;
}

inline std::vector<BigInt> primes_from(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(BigInt(x.get<std::uint64_t>()));
  return out;
}

inline Json labels_json(const std::vector<GroupSpec>& v) {
  Json a = Json::array();
  for (const auto& g : v) a.push_back(g.label());
  return a;
}

inline unsigned max_exponent(const FactoredInteger& n) {
  unsigned e = 0;
  for (const auto& f : n.factors()) e = std::max(e, f.exponent);
  return e;
}

inline std::size_t index_in(const std::vector<BigInt>& primes, const BigInt& r) {
  const auto it = std::find(primes.begin(), primes.end(), r);
  if (it == primes.end()) throw std::invalid_argument("prime " + r.str() + " not in pi(G)");
  return static_cast<std::size_t>(it - primes.begin());
}

inline bool contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Last earlier step with the given rule, on the shared trunk or in `branch`.
inline const Step* prior(const std::vector<Step>& steps, Rule r, const std::string& branch) {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    if (it->rule == r && (it->branch().empty() || it->branch() == branch)) return &*it;
  return nullptr;
}

inline bool prior_certified(const std::vector<Step>& steps, Rule r, const std::string& branch) {
  const Step* s = prior(steps, r, branch);
  return s && s->outcome == Outcome::certified;
}

// The pattern a step works with must be the one the chain computed.
inline void require_chain_pattern(const Json& in, const std::vector<Step>& steps) {
  const Step* op = prior(steps, Rule::OrderPattern, "");
  if (!op) throw std::invalid_argument("no OrderPattern step before this one");
  if (in.at("pattern") != op->inputs.at("pattern"))
    throw std::invalid_argument("pattern differs from the OrderPattern step");
  if (in.contains("primes") && in.at("primes") != op->inputs.at("primes"))
    throw std::invalid_argument("primes differ from the OrderPattern step");
}

inline std::vector<BigInt> r6_set(const UnitaryParams& u) {
  auto v = primitive_prime_divisors(u.q(), 6);
  std::sort(v.begin(), v.end());
  return v;
}

// Primes nothing outside the target can add to |Out(P)|: for |P| dividing N,
// field automorphism orders are at most the largest exponent E of N and the
// diagonal part involves primes <= rank + 1 <= E + 1; alternating and
// sporadic groups have |Out| in {1, 2, 4}.
inline bool beyond_outer(const BigInt& r, unsigned max_exp) { return r > std::max<unsigned>(max_exp + 1, 3); }

inline bool realization_connected(const std::vector<Mask>& adj) {
  if (adj.empty()) return true;
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (std::size_t i = 0; i < adj.size(); ++i)
      if ((frontier >> i) & 1) next |= adj[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (adj.size() == 64 ? ~Mask{0} : (Mask{1} << adj.size()) - 1);
}

}  // namespace detail

/// pi for the U_4(q) cases settled through the Lie-type scan, as published.
inline std::vector<BigInt> table7_pi_set(std::uint64_t q) {
  for (const auto& row : printed::u4_pi_rows())
    if (row.q == q) return std::vector<BigInt>(row.pi.begin(), row.pi.end());
  throw std::out_of_range("no published pi set for q = " + std::to_string(q));
}

// ---------------------------------------------------------------- evaluate

namespace detail {

inline Outcome eval_order_pattern(const Json& in, const UnitaryParams& t) {
  const UnitaryParams u(in.at("n").get<unsigned>(), in.at("p").get<std::uint64_t>(), in.at("k").get<unsigned>());
  if (!(u == t)) return Outcome::refuted;
  const auto order = order_U(u);
  if (order.to_string() != in.at("order").get<std::string>()) return Outcome::refuted;
  if (primes_from(in.at("primes")) != order.primes()) return Outcome::refuted;
  if (in.at("pattern").get<DegreePattern>() != u_pattern(u)) return Outcome::refuted;
  return Outcome::certified;
}

inline Outcome eval_connectivity(const Json& in, const std::vector<Step>& prev) {
  require_chain_pattern(in, prev);
  return connected_by_degrees(in.at("pattern").get<DegreePattern>()) == Verdict::certified ? Outcome::certified
                                                                                            : Outcome::inconclusive;
}

inline Outcome eval_tge3(const Json& in, const std::vector<Step>& prev) {
  require_chain_pattern(in, prev);
  const auto pattern = in.at("pattern").get<DegreePattern>();
  const auto primes = primes_from(in.at("primes"));
  const std::size_t n = pattern.size();
  const auto route = in.at("route").get<std::string>();
  if (route == "sequence") {
    auto asc = pattern;
    std::sort(asc.begin(), asc.end());
    if (asc != in.at("ascending").get<DegreePattern>()) return Outcome::refuted;
    if (asc[0] + 2 > n) return Outcome::inconclusive;
    if (in.at("d_1").get<unsigned>() != asc[0] || in.at("d_d1_plus_2").get<unsigned>() != asc[asc[0] + 1] ||
        in.at("n_minus_3").get<long long>() != static_cast<long long>(n) - 3)
      return Outcome::refuted;
    return t_ge3_by_sequence(asc) == Verdict::certified ? Outcome::certified : Outcome::inconclusive;
  }
  if (route == "min_degree") {
    // D_delta cannot induce a complete graph in a connected graph with more
    // than delta + 1 vertices, so it holds a nonadjacent pair of degree sum
    // 2 delta <= n - 3.
    if (!prior_certified(prev, Rule::Connectivity, "")) return Outcome::inconclusive;
    const unsigned delta = *std::min_element(pattern.begin(), pattern.end());
    std::vector<BigInt> dd;
    for (std::size_t i = 0; i < n; ++i)
      if (pattern[i] == delta) dd.push_back(primes[i]);
    if (in.at("delta").get<unsigned>() != delta || primes_from(in.at("d_delta")) != dd) return Outcome::refuted;
    const bool ok = dd.size() > delta && 2 * delta + 3 <= n && n > delta + 1;
    return ok ? Outcome::certified : Outcome::inconclusive;
  }
  if (route == "low_pair") {
    std::vector<std::size_t> low;
    for (std::size_t i = 0; i < n; ++i)
      if (pattern[i] == 1 || pattern[i] == 2) low.push_back(i);
    const auto pair = primes_from(in.at("pair"));
    if (low.size() != 2 || pair.size() != 2 || primes[low[0]] != pair[0] || primes[low[1]] != pair[1])
      return Outcome::refuted;
    if (!forced_nonadjacent(pattern, low[0], low[1])) return Outcome::inconclusive;
    return pattern[low[0]] + pattern[low[1]] + 3 <= n ? Outcome::certified : Outcome::inconclusive;
  }
  if (route == "exhaustive") {
    std::size_t count = 0;
    const Verdict v = alpha_ge3_all_realizations(pattern, &count);
    if (count != in.at("realizations").get<std::size_t>()) return Outcome::refuted;
    return v == Verdict::certified && count > 0 ? Outcome::certified : Outcome::inconclusive;
  }
  throw std::invalid_argument("unknown TGe3 route '" + route + "'");
}

inline Outcome eval_t2(const Json& in, const std::vector<Step>& prev) {
  require_chain_pattern(in, prev);
  const auto pattern = in.at("pattern").get<DegreePattern>();
  const auto primes = primes_from(in.at("primes"));
  const std::size_t i = index_in(primes, 2);
  if (in.at("degree_of_2").get<unsigned>() != pattern[i]) return Outcome::refuted;
  return pattern[i] + 1 < pattern.size() ? Outcome::certified : Outcome::inconclusive;
}

inline Outcome eval_vasiliev(const Json& in, const std::vector<Step>& prev) {
  const std::string b = in.contains("case") ? in["case"].get<std::string>() : "";
  return prior_certified(prev, Rule::TGe3, b) && prior_certified(prev, Rule::T2Ge2, b) ? Outcome::certified
                                                                                        : Outcome::inconclusive;
}

inline std::vector<BigInt> pi_by_rule(const std::string& rule, const UnitaryParams& t) {
  if (rule == "R_6(q)") return r6_set(t);
  if (rule == "R_4(q) u R_6(q)") return derived_pi_set(to_u64(t.q()));
  throw std::invalid_argument("unknown pi rule '" + rule + "'");
}

inline Outcome eval_kernel(const Json& in, const UnitaryParams& t, const std::vector<Step>& prev) {
  const std::string b = in.contains("case") ? in["case"].get<std::string>() : "";
  if (!prior_certified(prev, Rule::VasilievHypothesis, b)) return Outcome::inconclusive;
  const auto pi = primes_from(in.at("pi"));
  if (pi != pi_by_rule(in.at("pi_rule").get<std::string>(), t)) return Outcome::refuted;
  const auto all = order_U(t).primes();
  const bool proper = !pi.empty() && pi.size() < all.size() &&
                      std::all_of(pi.begin(), pi.end(), [&](const BigInt& r) {
                        return std::find(all.begin(), all.end(), r) != all.end();
                      });
  if (!proper) return Outcome::refuted;
  if (t.n == 4 && !prior_certified(prev, Rule::Connectivity, "")) return Outcome::inconclusive;
  return Outcome::certified;
}

inline Outcome eval_candidate_scan(const Json& in, const UnitaryParams& t) {
  const auto N = FactoredInteger::parse(in.at("N").get<std::string>());
  if (!(N == order_U(t))) return Outcome::refuted;
  const auto required = primes_from(in.at("required"));
  const auto allowed = primes_from(in.at("allowed"));
  if (allowed != N.primes() || required.size() != 1) return Outcome::refuted;
  if (in.at("max_exponent").get<unsigned>() != max_exponent(N)) return Outcome::refuted;
  if (!beyond_outer(required[0], max_exponent(N))) return Outcome::inconclusive;
  const Json got = labels_json(candidates(N, required, allowed));
  if (got != in.at("groups")) return Outcome::refuted;
  const auto target = GroupSpec::unitary(t.n, t.p, t.k).label();
  return std::find(got.begin(), got.end(), target) != got.end() ? Outcome::certified : Outcome::refuted;
}

inline std::vector<GroupSpec> non_lie_with_prime(const BigInt& r, const std::vector<BigInt>& allowed) {
  std::vector<GroupSpec> out;
  auto take = [&](const GroupSpec& g) {
    const BigInt o = simple_order_value(g);
    if (o % r == 0 && supported_by(o, allowed)) out.push_back(g);
  };
  for (const auto& g : sporadic_groups()) take(g);
  take(GroupSpec::tits());
  return out;
}

inline Outcome eval_lie_scan(const Json& in, const UnitaryParams& t) {
  const auto N = order_U(t);
  const BigInt r(in.at("r").get<std::uint64_t>());
  const auto allowed = primes_from(in.at("allowed"));
  if (allowed != N.primes()) return Outcome::refuted;
  if (in.at("max_exponent").get<unsigned>() != max_exponent(N)) return Outcome::refuted;
  if (!beyond_outer(r, max_exponent(N))) return Outcome::inconclusive;
  // Alt_m with r | m!/2 needs m >= r, and then every prime below r divides it
  const BigInt gap(in.at("alternating_missing_prime").get<std::uint64_t>());
  if (!(gap < r) || !is_prime(gap) || std::find(allowed.begin(), allowed.end(), gap) != allowed.end())
    return Outcome::refuted;
  if (labels_json(non_lie_with_prime(r, allowed)) != in.at("sporadic")) return Outcome::refuted;
  auto groups = lie_with_prime(r, allowed);
  for (const auto& g : non_lie_with_prime(r, allowed)) groups.push_back(g);
  sort_specs(groups);
  if (labels_json(groups) != in.at("groups")) return Outcome::refuted;
  const auto target = GroupSpec::unitary(t.n, t.p, t.k);
  return std::find(groups.begin(), groups.end(), target) != groups.end() ? Outcome::certified : Outcome::refuted;
}

// Why P cannot be the simple section, or "" if it can.
inline std::string outer_fate(const GroupSpec& P, const FactoredInteger& N, const std::vector<BigInt>& pi) {
  const BigInt o = simple_order_value(P);
  if (N.value() % o != 0) return "|P| does not divide |G|";
  const BigInt out = out_order(P);
  std::string bad;
  for (const auto& r : pi)
    if ((r_part(o, r) * r_part(out, r)) % N.part(r) != 0) bad += (bad.empty() ? "" : ", ") + r.str();
  return bad.empty() ? "" : "|G|_r does not divide |Aut(P)| for r = " + bad;
}

inline Outcome eval_outer(const Json& in, const UnitaryParams& t, const std::vector<Step>& prev) {
  const std::string b = in.contains("case") ? in["case"].get<std::string>() : "";
  const Step* scan = nullptr;
  for (auto it = prev.rbegin(); it != prev.rend() && !scan; ++it)
    if ((it->rule == Rule::CandidateScan || it->rule == Rule::LieScan) && it->branch() == b) scan = &*it;
  if (!scan || scan->outcome != Outcome::certified) return Outcome::inconclusive;
  if (!prior_certified(prev, Rule::PiPrimeKernel, b)) return Outcome::inconclusive;
  const Step* kernel = prior(prev, Rule::PiPrimeKernel, b);
  if (in.at("pi") != kernel->inputs.at("pi")) return Outcome::refuted;

  const auto N = order_U(t);
  if (in.at("N").get<std::string>() != N.to_string()) return Outcome::refuted;
  const auto pi = primes_from(in.at("pi"));
  const auto& cands = in.at("candidates");
  if (cands.size() != scan->inputs.at("groups").size()) return Outcome::refuted;
  Json survivors = Json::array();
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto label = cands[i].at("group").get<std::string>();
    if (label != scan->inputs.at("groups")[i]) return Outcome::refuted;
    const auto P = parse_group(label);
    if (cands[i].at("order").get<std::string>() != simple_order(P).to_string() ||
        cands[i].at("out").get<std::uint64_t>() != to_u64(out_order(P)))
      return Outcome::refuted;
    const auto fate = outer_fate(P, N, pi);
    if (cands[i].at("fate").get<std::string>() != (fate.empty() ? "survives" : fate)) return Outcome::refuted;
    if (fate.empty()) survivors.push_back(label);
  }
  if (survivors != in.at("survivors")) return Outcome::refuted;
  const auto target = GroupSpec::unitary(t.n, t.p, t.k).label();
  // a single survivor of order |G| leaves K = 1 and G = P
  return survivors.size() == 1 && survivors[0] == target ? Outcome::certified : Outcome::inconclusive;
}

inline Outcome eval_order_components(const Json& in, const UnitaryParams& t, const std::vector<Step>& prev) {
  require_chain_pattern(in, prev);
  const auto pattern = in.at("pattern").get<DegreePattern>();
  const auto primes = primes_from(in.at("primes"));
  const auto pair = primes_from(in.at("pair"));
  if (pair.size() != 2 || pair != r6_set(t)) return Outcome::refuted;
  for (const auto& r : pair)
    if (pattern[index_in(primes, r)] != 1) return Outcome::inconclusive;
  // r ~ s with both of degree 1 makes {r, s} a component; the rest must be
  // connected in every realization of the remaining degrees
  DegreePattern rest;
  std::vector<BigInt> pi1;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (std::find(pair.begin(), pair.end(), primes[i]) == pair.end()) {
      rest.push_back(pattern[i]);
      pi1.push_back(primes[i]);
    }
  if (primes_from(in.at("pi_1")) != pi1) return Outcome::refuted;
  std::size_t count = 0;
  bool all_connected = true;
  for_each_realization(rest, [&](const std::vector<Mask>& adj) {
    ++count;
    if (!realization_connected(adj)) all_connected = false;
    return true;
  });
  if (count != in.at("realizations").get<std::size_t>()) return Outcome::refuted;
  const auto N = order_U(t);
  const auto in_pair = [&](const BigInt& p) { return std::find(pair.begin(), pair.end(), p) != pair.end(); };
  const Json comps = Json::array({N.restrict_to([&](const BigInt& p) { return !in_pair(p); }).to_string(),
                                  N.restrict_to(in_pair).to_string()});
  if (comps != in.at("components")) return Outcome::refuted;
  std::vector<std::string> target_oc;
  for (const auto& m : order_components(t, t.n == 3 ? mu_U3(t.p, t.k) : mu_U4(t.p, t.k)))
    target_oc.push_back(m.to_string());
  if (std::set<std::string>(target_oc.begin(), target_oc.end()) !=
      std::set<std::string>{comps[0].get<std::string>(), comps[1].get<std::string>()})
    return Outcome::refuted;
  return count > 0 && all_connected ? Outcome::certified : Outcome::inconclusive;
}

inline Outcome eval_literature(const Json& in, const UnitaryParams& t) {
  const auto q = to_u64(t.q());
  const auto list = in.at("list").get<std::string>();
  const unsigned h = in.at("h").get<unsigned>();
  auto listed = [](bool b) { return b ? Outcome::certified : Outcome::refuted; };
  if (t.n == 3 && list == "U_3 small q" && h == 1) return listed(contains(printed::u3_known_small(), q));
  if (t.n == 3 && list == "U_3 single prime" && h == 1) {
    if (!contains(printed::u3_single_prime_list(), q)) return Outcome::refuted;
    return listed(r6_set(t).size() == 1);
  }
  if (t.n == 4 && list == "U_4 known" && h == 1) return listed(contains(printed::u4_known_h1(), q));
  if (t.n == 4 && list == "U_4(2)" && h == 2) return listed(q == 2);
  return Outcome::refuted;
}

}  // namespace detail

/// Decides a step from its recorded inputs, the target and the earlier steps.
inline Outcome evaluate(const Step& s, const UnitaryParams& target, const std::vector<Step>& prev) {
  const Json& in = s.inputs;
  switch (s.rule) {
    case Rule::OrderPattern: return detail::eval_order_pattern(in, target);
    case Rule::Connectivity: return detail::eval_connectivity(in, prev);
    case Rule::TGe3: return detail::eval_tge3(in, prev);
    case Rule::T2Ge2: return detail::eval_t2(in, prev);
    case Rule::VasilievHypothesis: return detail::eval_vasiliev(in, prev);
    case Rule::PiPrimeKernel: return detail::eval_kernel(in, target, prev);
    case Rule::CandidateScan: return detail::eval_candidate_scan(in, target);
    case Rule::LieScan: return detail::eval_lie_scan(in, target);
    case Rule::OuterExclusion: return detail::eval_outer(in, target, prev);
    case Rule::OrderComponents: return detail::eval_order_components(in, target, prev);
    case Rule::LiteratureConstant: return detail::eval_literature(in, target);
  }
  return Outcome::refuted;
}

/// The verdict a step list supports.
inline Conclusion conclude(const std::vector<Step>& steps, const UnitaryParams& t) {
  using K = Conclusion::Kind;
  auto ok = [&](Rule r, const std::string& b = "") {
    return std::any_of(steps.begin(), steps.end(), [&](const Step& s) {
      return s.rule == r && s.branch() == b && s.outcome == Outcome::certified;
    });
  };
  for (const auto& s : steps)
    if (s.rule == Rule::LiteratureConstant && s.outcome == Outcome::certified) {
      const unsigned h = s.inputs.at("h").get<unsigned>();
      return {h == 1 ? K::od_characterizable : K::k_fold, h, "literature"};
    }
  if (std::any_of(steps.begin(), steps.end(), [](const Step& s) { return s.outcome != Outcome::certified; }))
    return {};
  if (!(ok(Rule::OrderPattern) && ok(Rule::TGe3) && ok(Rule::T2Ge2) && ok(Rule::VasilievHypothesis))) return {};
  auto closed_by_scan = [&](const std::string& b) {
    return ok(Rule::PiPrimeKernel, b) && (ok(Rule::CandidateScan, b) || ok(Rule::LieScan, b)) &&
           ok(Rule::OuterExclusion, b);
  };
  bool closed = false;
  if (t.n == 4) closed = ok(Rule::Connectivity) && closed_by_scan("");
  if (t.n == 3) {
    const auto pair = detail::r6_set(t);
    if (pair.size() == 2) {
      const std::string adj = pair[0].str() + " ~ " + pair[1].str();
      const std::string nonadj = pair[0].str() + " !~ " + pair[1].str();
      closed = ok(Rule::OrderComponents, adj) && closed_by_scan(nonadj);
    }
  }
  return closed ? Conclusion{K::od_characterizable, 1, "derived"} : Conclusion{};
}

// ---------------------------------------------------------------- pipeline

namespace detail {

inline const char* anchor_for(Rule r) {
  switch (r) {
    case Rule::OrderPattern: return "order and degree pattern of the target";
    case Rule::Connectivity: return "max degree + min degree >= |pi(G)| - 1 forces a connected graph";
    case Rule::TGe3: return "independence number of the prime graph is at least 3";
    case Rule::T2Ge2: return "2 is nonadjacent to some prime";
    case Rule::VasilievHypothesis: return "structure theorem: t(G) >= 3 and t(2,G) >= 2 give P <= G/K <= Aut(P)";
    case Rule::PiPrimeKernel: return "Frattini argument: the soluble radical K is a pi'-group";
    case Rule::CandidateScan: return "simple groups of order dividing |G| containing the largest prime of pi";
    case Rule::LieScan: return "simple groups containing a large primitive prime divisor";
    case Rule::OuterExclusion: return "r-parts of |G| must divide |Aut(P)| for r in pi";
    case Rule::OrderComponents: return "recognition of U_3(q) by its order components";
    case Rule::LiteratureConstant: return "previously established value of h";
  }
  return "";
}

class ChainBuilder {
 public:
  explicit ChainBuilder(Certificate& c) : c_(c) {}

  // Appends the step decided by evaluate(); false once the chain must stop.
  bool add(Rule r, Json inputs) {
    Step s{r, anchor_for(r), std::move(inputs), Outcome::inconclusive};
    s.outcome = evaluate(s, c_.target, c_.steps);
    c_.steps.push_back(std::move(s));
    return c_.steps.back().outcome == Outcome::certified;
  }

  Outcome probe(Rule r, const Json& inputs) const {
    return evaluate(Step{r, anchor_for(r), inputs, Outcome::inconclusive}, c_.target, c_.steps);
  }

  Json base() const {
    Json j;
    j["pattern"] = c_.pattern;
    j["primes"] = primes_json(c_.order.primes());
    return j;
  }

 private:
  Certificate& c_;
};

inline Certificate start(unsigned n, std::uint64_t p, unsigned k) {
  Certificate c;
  c.target = UnitaryParams(n, p, k);
  if (!c.target.is_simple()) throw std::invalid_argument(c.target.label() + " is not simple");
  c.order = order_U(c.target);
  c.mu = (n == 3 ? mu_U3(p, k) : mu_U4(p, k)).mu;
  c.pattern = u_pattern(c.target);
  return c;
}

inline bool add_order_pattern(ChainBuilder& b, const Certificate& c) {
  Json j;
  j["n"] = c.target.n;
  j["p"] = c.target.p;
  j["k"] = c.target.k;
  j["order"] = c.order.to_string();
  j["primes"] = primes_json(c.order.primes());
  j["pattern"] = c.pattern;
  return b.add(Rule::OrderPattern, std::move(j));
}

// Tries the t(G) >= 3 routes in turn; records the first that works.
inline bool add_tge3(ChainBuilder& b, const Certificate& c) {
  const auto& pattern = c.pattern;
  const auto primes = c.order.primes();
  const std::size_t n = pattern.size();
  std::vector<std::string> tried;
  std::vector<Json> routes;

  auto asc = pattern;
  std::sort(asc.begin(), asc.end());
  if (asc[0] + 2 <= n) {
    Json j = b.base();
    j["route"] = "sequence";
    j["ascending"] = asc;
    j["d_1"] = asc[0];
    j["d_d1_plus_2"] = asc[asc[0] + 1];
    j["n_minus_3"] = static_cast<long long>(n) - 3;
    routes.push_back(j);
  }
  {
    const unsigned delta = asc[0];
    std::vector<BigInt> dd;
    for (std::size_t i = 0; i < n; ++i)
      if (pattern[i] == delta) dd.push_back(primes[i]);
    Json j = b.base();
    j["route"] = "min_degree";
    j["delta"] = delta;
    j["d_delta"] = primes_json(dd);
    routes.push_back(j);
  }
  {
    std::vector<BigInt> low;
    for (std::size_t i = 0; i < n; ++i)
      if (pattern[i] == 1 || pattern[i] == 2) low.push_back(primes[i]);
    if (low.size() == 2) {
      Json j = b.base();
      j["route"] = "low_pair";
      j["pair"] = primes_json(low);
      routes.push_back(j);
    }
  }
  {
    std::size_t count = 0;
    alpha_ge3_all_realizations(pattern, &count);
    Json j = b.base();
    j["route"] = "exhaustive";
    j["realizations"] = count;
    routes.push_back(j);
  }
  for (auto& j : routes) {
    const std::string route = j["route"];
    if (&j != &routes.back() && b.probe(Rule::TGe3, j) != Outcome::certified) {
      tried.push_back(route);
      continue;
    }
    j["routes_not_applicable"] = tried;
    return b.add(Rule::TGe3, j);
  }
  return false;
}

inline bool add_t2(ChainBuilder& b, const Certificate& c) {
  Json j = b.base();
  j["degree_of_2"] = c.pattern[detail::index_in(c.order.primes(), 2)];
  return b.add(Rule::T2Ge2, std::move(j));
}

inline bool add_scan_and_exclusion(ChainBuilder& b, const Certificate& c, const std::vector<BigInt>& pi,
                                   const std::string& branch, bool lie_scan) {
  const BigInt r = *std::max_element(pi.begin(), pi.end());
  const auto allowed = c.order.primes();
  std::vector<GroupSpec> groups;
  Json scan;
  if (!branch.empty()) scan["case"] = branch;
  if (lie_scan) {
    scan["r"] = to_u64(r);
    scan["allowed"] = primes_json(allowed);
    scan["max_exponent"] = max_exponent(c.order);
    BigInt gap = 2;
    while (gap < r && (!is_prime(gap) || std::find(allowed.begin(), allowed.end(), gap) != allowed.end())) ++gap;
    scan["alternating_missing_prime"] = to_u64(gap);
    scan["sporadic"] = labels_json(non_lie_with_prime(r, allowed));
    groups = lie_with_prime(r, allowed);
    for (const auto& g : non_lie_with_prime(r, allowed)) groups.push_back(g);
    sort_specs(groups);
    scan["groups"] = labels_json(groups);
    if (!b.add(Rule::LieScan, std::move(scan))) return false;
  } else {
    scan["N"] = c.order.to_string();
    scan["required"] = primes_json({r});
    scan["allowed"] = primes_json(allowed);
    scan["max_exponent"] = max_exponent(c.order);
    groups = candidates(c.order, {r}, allowed);
    scan["groups"] = labels_json(groups);
    if (!b.add(Rule::CandidateScan, std::move(scan))) return false;
  }
  Json ex;
  if (!branch.empty()) ex["case"] = branch;
  ex["N"] = c.order.to_string();
  ex["pi"] = primes_json(pi);
  Json cands = Json::array();
  Json survivors = Json::array();
  for (const auto& P : groups) {
    const auto fate = outer_fate(P, c.order, pi);
    Json e;
    e["group"] = P.label();
    e["order"] = simple_order(P).to_string();
    e["out"] = to_u64(out_order(P));
    e["fate"] = fate.empty() ? "survives" : fate;
    cands.push_back(e);
    if (fate.empty()) survivors.push_back(P.label());
  }
  ex["candidates"] = cands;
  ex["survivors"] = survivors;
  return b.add(Rule::OuterExclusion, std::move(ex));
}

inline void finish(Certificate& c) { c.verdict = conclude(c.steps, c.target); }

inline Json literature_inputs(const std::string& list, unsigned h, bool derivable) {
  Json j;
  j["list"] = list;
  j["h"] = h;
  j["derivable"] = derivable;
  return j;
}

}  // namespace detail

/// Certificate for U_3(p^k).
inline Certificate verify_u3(std::uint64_t p, unsigned k) {
  const UnitaryParams u(3, p, k);
  if (u.q() == 2) throw std::invalid_argument("U_3(2) is soluble; no spectrum formula applies");
  Certificate c = detail::start(3, p, k);
  detail::ChainBuilder b(c);
  const auto q = to_u64(u.q());
  if (detail::contains(printed::u3_known_small(), q)) {
    b.add(Rule::LiteratureConstant, detail::literature_inputs("U_3 small q", 1, false));
  } else if (detail::contains(printed::u3_single_prime_list(), q)) {
    Json j = detail::literature_inputs("U_3 single prime", 1, false);
    j["pi_2"] = detail::primes_json(detail::r6_set(u));
    b.add(Rule::LiteratureConstant, std::move(j));
  } else if (detail::add_order_pattern(b, c) && detail::add_tge3(b, c) && detail::add_t2(b, c) &&
             b.add(Rule::VasilievHypothesis, Json::object())) {
    const auto pair = detail::r6_set(u);
    if (pair.size() == 2) {
      const std::string adj = pair[0].str() + " ~ " + pair[1].str();
      const std::string nonadj = pair[0].str() + " !~ " + pair[1].str();
      Json oc = b.base();
      oc["case"] = adj;
      oc["pair"] = detail::primes_json(pair);
      std::vector<BigInt> pi1;
      DegreePattern rest;
      const auto primes = c.order.primes();
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (std::find(pair.begin(), pair.end(), primes[i]) == pair.end()) {
          pi1.push_back(primes[i]);
          rest.push_back(c.pattern[i]);
        }
      oc["pi_1"] = detail::primes_json(pi1);
      std::size_t count = 0;
      for_each_realization(rest, [&](const std::vector<Mask>&) { return ++count, true; });
      oc["realizations"] = count;
      const auto in_pair = [&](const BigInt& p) { return std::find(pair.begin(), pair.end(), p) != pair.end(); };
      oc["components"] = Json::array({c.order.restrict_to([&](const BigInt& p) { return !in_pair(p); }).to_string(),
                                      c.order.restrict_to(in_pair).to_string()});
      b.add(Rule::OrderComponents, std::move(oc));

      Json k;
      k["case"] = nonadj;
      k["pi"] = detail::primes_json(pair);
      k["pi_rule"] = "R_6(q)";
      if (b.add(Rule::PiPrimeKernel, std::move(k))) detail::add_scan_and_exclusion(b, c, pair, nonadj, false);
    }
  }
  detail::finish(c);
  return c;
}

/// Certificate for U_4(p^k).
inline Certificate verify_u4(std::uint64_t p, unsigned k) {
  Certificate c = detail::start(4, p, k);
  detail::ChainBuilder b(c);
  const auto q = to_u64(c.target.q());
  if (q == 2) {
    b.add(Rule::LiteratureConstant, detail::literature_inputs("U_4(2)", 2, false));
  } else if (q != 17 && detail::contains(printed::u4_known_h1(), q)) {
    // 17 is also on the list, but the chain below settles it
    b.add(Rule::LiteratureConstant, detail::literature_inputs("U_4 known", 1, false));
  } else if (detail::add_order_pattern(b, c)) {
    Json conn = b.base();
    const auto [lo, hi] = std::minmax_element(c.pattern.begin(), c.pattern.end());
    conn["max_degree"] = *hi;
    conn["min_degree"] = *lo;
    if (b.add(Rule::Connectivity, std::move(conn)) && detail::add_tge3(b, c) && detail::add_t2(b, c) &&
        b.add(Rule::VasilievHypothesis, Json::object())) {
      const bool published = detail::contains(printed::u4_scan_by_lie_type(), q);
      const auto pi = published ? table7_pi_set(q) : derived_pi_set(q);
      Json kj;
      kj["pi"] = detail::primes_json(pi);
      kj["pi_rule"] = "R_4(q) u R_6(q)";
      kj["pi_source"] = published ? "published table" : "derived";
      if (b.add(Rule::PiPrimeKernel, std::move(kj))) detail::add_scan_and_exclusion(b, c, pi, "", published);
    }
  }
  detail::finish(c);
  return c;
}

inline Certificate verify(unsigned n, std::uint64_t p, unsigned k) {
  if (n == 3) return verify_u3(p, k);
  if (n == 4) return verify_u4(p, k);
  throw std::invalid_argument("only U_3 and U_4 are supported");
}

// ---------------------------------------------------------------- JSON

inline Json to_json(const Step& s) {
  Json j;
  j["rule"] = to_string(s.rule);
  j["anchor"] = s.anchor;
  j["inputs"] = s.inputs;
  j["outcome"] = to_string(s.outcome);
  return j;
}

inline Json to_json(const Conclusion& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  if (v.h) j["h"] = v.h;
  if (!v.source.empty()) j["source"] = v.source;
  return j;
}

inline Json to_json(const Certificate& c) {
  Json j;
  j["target"] = c.target.label();
  j["order"] = c.order.to_string();
  Json mu = Json::array();
  for (const auto& m : c.mu) mu.push_back(m.to_string());
  j["mu"] = mu;
  j["degree_pattern"] = c.pattern;
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  j["verdict"] = to_json(c.verdict);
  return j;
}

struct ReplayReport {
  bool accepted = true;
  std::vector<std::string> problems;
  void fail(std::string why) {
    accepted = false;
    problems.push_back(std::move(why));
  }
};

/// Re-checks a serialized certificate: every step is re-evaluated from its
/// recorded inputs and the verdict must follow from the step outcomes.
inline ReplayReport replay(const Json& cert) {
  ReplayReport rep;
  try {
    const auto g = parse_group(cert.at("target").get<std::string>());
    if (g.family != Family::A2 || (g.rank != 2 && g.rank != 3)) {
      rep.fail("target is not U_3(q) or U_4(q)");
      return rep;
    }
    const UnitaryParams t(g.rank + 1, g.p, g.k);
    if (cert.at("order").get<std::string>() != order_U(t).to_string()) rep.fail("order differs from |target|");
    if (cert.at("degree_pattern").get<DegreePattern>() != u_pattern(t)) rep.fail("degree pattern differs");
    std::vector<Step> steps;
    bool stopped = false;
    for (const auto& js : cert.at("steps")) {
      if (stopped) rep.fail("steps recorded after a refuted step");
      Step s{rule_from_string(js.at("rule").get<std::string>()), js.at("anchor").get<std::string>(),
             js.at("inputs"), outcome_from_string(js.at("outcome").get<std::string>())};
      Outcome got;
      try {
        got = evaluate(s, t, steps);
      } catch (const std::exception& e) {
        rep.fail(std::string(to_string(s.rule)) + ": malformed inputs (" + e.what() + ")");
        got = Outcome::refuted;
      }
      if (got != s.outcome)
        rep.fail(std::string(to_string(s.rule)) + ": recorded " + to_string(s.outcome) + ", re-evaluated " +
                 to_string(got));
      if (s.outcome == Outcome::refuted) stopped = true;
      steps.push_back(std::move(s));
    }
    const Json want = to_json(conclude(steps, t));
    if (want != cert.at("verdict")) rep.fail("verdict " + cert.at("verdict").dump() + " does not follow; expected " + want.dump());
  } catch (const std::exception& e) {
    rep.fail(std::string("malformed certificate: ") + e.what());
  }
  return rep;
}

}  // namespace odc
