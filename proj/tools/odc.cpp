// odc: tables, single queries, prime-graph export and certificate runs for
// the unitary groups U_n(q).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "odc/odpipeline.hpp"
#include "odc/tables.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "7^2", or a bare number with a single power form: 49 = 7^2 is accepted,
// 64 = 2^6 = 4^3 = 8^2 must be written 2^6.
odc::UnitaryParams parse_unitary(const std::string& family, const std::string& q) {
  if (family.size() < 2 || family[0] != 'u') throw UsageError("--family must look like u3 or u4");
  unsigned n = 0;
  try {
    n = std::stoul(family.substr(1));
  } catch (const std::exception&) {
    throw UsageError("--family must look like u3 or u4");
  }
  std::uint64_t p = 0;
  unsigned k = 1;
  try {
    const auto caret = q.find('^');
    const odc::BigInt base = odc::parse_bigint(q.substr(0, caret));
    if (caret != std::string::npos) k = odc::parse_bigint(q.substr(caret + 1)).convert_to<unsigned>();
    if (!odc::fits_u64(base)) throw UsageError("q is too large");
    p = odc::to_u64(base);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot read q = '" + q + "'; write it as p^k");
  }
  if (!odc::is_prime(p)) {
    const auto f = p > 1 ? odc::factorize(p) : odc::FactoredInteger{};
    if (f.factors().size() != 1 || k != 1) throw UsageError("q = " + q + " is not a prime power");
    const unsigned e = f.factors()[0].exponent;
    if (!odc::is_prime(std::uint64_t{e}))
      throw UsageError("q = " + q + " has several power forms; write it as " + f.to_string());
    p = odc::to_u64(f.factors()[0].prime);
    k = e;
  }
  if (k == 0) throw UsageError("the exponent of q must be positive");
  try {
    odc::UnitaryParams u(n, p, k);
    if (!u.is_simple()) throw UsageError(u.label() + " is not simple");
    return u;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<odc::BigInt> parse_prime_list(const std::string& s) {
  std::vector<odc::BigInt> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      const auto p = odc::parse_bigint(item);
      if (!odc::is_prime(p)) throw UsageError(item + " is not prime");
      out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Integer literal or a factored form such as 2^6*3^2*5*7.
odc::FactoredInteger parse_number(const std::string& s) {
  try {
    if (s.find_first_of("^*") != std::string::npos) return odc::FactoredInteger::parse(s);
    const auto n = odc::parse_bigint(s);
    if (n < 1) throw UsageError("expected a positive integer");
    return odc::factorize(n);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("cannot read '" + s + "': " + e.what());
  }
}

odc::Spectrum spectrum_of(const odc::UnitaryParams& u) {
  if (u.n == 3) return odc::mu_U3(u.p, u.k);
  if (u.n == 4) return odc::mu_U4(u.p, u.k);
  return odc::spectrum_U(u);
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> labels(const std::vector<odc::GroupSpec>& v) {
  std::vector<std::string> out;
  for (const auto& g : v) out.push_back(g.label());
  return out;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OD-characterization toolkit for U_3(q) and U_4(q)"};
  app.require_subcommand(1);

  std::string family = "u4", q, out, number, expect, group, allowed_s, required_s, replay_path;
  bool dot = false, compact = false, check = false, parallel = false;
  int table_no = 0;
  std::uint64_t r = 0;

  auto* c_factor = app.add_subcommand("factor", "factor a positive integer");
  c_factor->add_option("n", number, "integer")->required();

  auto add_group_opts = [&](CLI::App* c) {
    c->add_option("--family", family, "u3, u4 (or uN)")->capture_default_str();
    c->add_option("--q", q, "field size as p^k, e.g. 7^2")->required();
  };
  auto* c_mu = app.add_subcommand("mu", "maximal element orders of U_n(q)");
  add_group_opts(c_mu);

  auto* c_order = app.add_subcommand("order", "order of U_n(q) or of a named simple group");
  c_order->add_option("--family", family, "u3, u4 (or uN)");
  c_order->add_option("--q", q, "field size as p^k");
  c_order->add_option("--group", group, "label such as B_2(59), Alt_8, M_11");

  auto* c_gk = app.add_subcommand("gk", "prime graph of U_n(q)");
  add_group_opts(c_gk);
  c_gk->add_flag("--dot", dot, "emit Graphviz DOT");
  c_gk->add_flag("--compact", compact, "merge same-neighbourhood vertex classes");
  c_gk->add_option("--out", out, "write to file");

  auto* c_pattern = app.add_subcommand("pattern", "degree pattern of U_n(q)");
  add_group_opts(c_pattern);

  auto* c_table = app.add_subcommand("table", "recompute a published table and diff it");
  c_table->add_option("n", table_no, "4 (U_3), 5 (sequences), 6 (U_4), 7 (pi sets)")
      ->required()
      ->check(CLI::IsMember({4, 5, 6, 7}));
  c_table->add_flag("--check", check, "exit 1 if any cell differs from the printed value");
  c_table->add_flag("--parallel", parallel, "compute rows concurrently");

  auto* c_lie = app.add_subcommand("lie-scan", "Lie-type groups L with r | |L| and pi(L) within a prime set");
  c_lie->add_option("--r", r, "prime")->required();
  auto* lie_allowed = c_lie->add_option("--allowed", allowed_s, "comma-separated primes");
  auto* lie_from = c_lie->add_option("--allowed-from", group, "take pi of this group, e.g. U_4(7^2)");
  lie_allowed->excludes(lie_from);

  auto* c_cand = app.add_subcommand("candidates", "simple groups of order dividing N");
  c_cand->add_option("N", number, "integer or factored form")->required();
  c_cand->add_option("--required", required_s, "primes that must divide |P|");
  c_cand->add_option("--allowed", allowed_s, "primes |P| may involve (default: those of N)");

  auto* c_verify = app.add_subcommand("verify", "build (or replay) an OD-characterization certificate");
  c_verify->add_option("--family", family, "u3 or u4")->capture_default_str();
  c_verify->add_option("--q", q, "field size as p^k");
  c_verify->add_option("--out", out, "write the JSON certificate to a file");
  c_verify->add_option("--expect", expect, "h=1, h=2 or inconclusive; exit 1 on mismatch")
      ->check(CLI::IsMember({"h=1", "h=2", "inconclusive"}));
  c_verify->add_option("--replay", replay_path, "re-check a certificate file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_factor->parsed()) {
      const auto n = odc::parse_bigint(number);
      if (n < 1) throw UsageError("factor needs a positive integer");
      const auto f = odc::factorize(n);
      std::cout << n << " = " << (f.is_one() ? "(empty product)" : f.to_string()) << '\n';
    } else if (c_mu->parsed()) {
      const auto u = parse_unitary(family, q);
      for (const auto& m : spectrum_of(u).mu) std::cout << m << '\n';
    } else if (c_order->parsed()) {
      if (!group.empty() == !q.empty()) throw UsageError("give either --group or --q");
      odc::FactoredInteger o;
      if (!group.empty()) {
        try {
          o = odc::simple_order(odc::parse_group(group));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      } else {
        o = odc::order_U(parse_unitary(family, q));
      }
      std::cout << o << " = " << o.value() << '\n';
    } else if (c_gk->parsed()) {
      const auto u = parse_unitary(family, q);
      const auto g = odc::build_gk(spectrum_of(u), odc::order_U(u));
      std::string text;
      if (dot) {
        text = odc::export_dot(g, compact, compact ? odc::class_hints(u) : odc::ClassHints{}, u.label());
      } else {
        std::ostringstream os;
        os << "vertices:";
        for (std::size_t i = 0; i < g.size(); ++i) os << ' ' << g.vertex(i);
        os << "\nedges:";
        for (auto [a, b] : g.edges()) os << ' ' << g.vertex(a) << '-' << g.vertex(b);
        os << '\n';
        text = os.str();
      }
      write_or_print(text, out);
    } else if (c_pattern->parsed()) {
      const auto u = parse_unitary(family, q);
      const auto g = odc::build_gk(spectrum_of(u), odc::order_U(u));
      std::vector<std::string> primes, degs;
      for (std::size_t i = 0; i < g.size(); ++i) primes.push_back(g.vertex(i).str());
      for (auto d : odc::degree_pattern(g)) degs.push_back(std::to_string(d));
      std::cout << "primes: " << join(primes, " ") << "\npattern: (" << join(degs, ", ") << ")\n";
    } else if (c_table->parsed()) {
      std::vector<odc::TableRow> rows;
      switch (table_no) {
        case 4: rows = odc::table_u3(); break;
        case 5: rows = odc::table_u3_sequences(); break;
        case 6: rows = odc::table_u4(parallel); break;
        case 7: rows = odc::table_u4_pi(); break;
      }
      std::cout << odc::render(rows, true);
      if (check && !odc::mismatches(rows).empty()) return 1;
    } else if (c_lie->parsed()) {
      std::vector<odc::BigInt> allowed;
      if (!group.empty()) {
        try {
          allowed = odc::simple_order(odc::parse_group(group)).primes();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      } else {
        allowed = parse_prime_list(allowed_s);
      }
      if (std::find(allowed.begin(), allowed.end(), odc::BigInt(r)) == allowed.end())
        throw UsageError("--r must belong to the allowed primes");
      for (const auto& s : labels(odc::lie_with_prime(r, allowed))) std::cout << s << '\n';
    } else if (c_cand->parsed()) {
      const auto N = parse_number(number);
      const auto required = parse_prime_list(required_s);
      const auto allowed = allowed_s.empty() ? N.primes() : parse_prime_list(allowed_s);
      for (const auto& g : odc::candidates(N, required, allowed))
        std::cout << g.label() << '\t' << odc::simple_order(g) << '\n';
    } else if (c_verify->parsed()) {
      odc::Json j;
      if (!replay_path.empty()) {
        std::ifstream f(replay_path);
        if (!f) throw UsageError("cannot read " + replay_path);
        try {
          j = odc::Json::parse(f);
        } catch (const std::exception& e) {
          throw UsageError(std::string("not JSON: ") + e.what());
        }
        const auto rep = odc::replay(j);
        std::cout << (rep.accepted ? "accepted" : "rejected") << '\n';
        for (const auto& p : rep.problems) std::cout << "  " << p << '\n';
        if (!rep.accepted) return 1;
      } else {
        if (q.empty()) throw UsageError("verify needs --q (or --replay)");
        const auto u = parse_unitary(family, q);
        if (u.n != 3 && u.n != 4) throw UsageError("verify supports u3 and u4");
        try {
          j = odc::to_json(odc::verify(u.n, u.p, u.k));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        if (out.empty()) {
          std::cout << j.dump(2) << '\n';
        } else {
          write_or_print(j.dump(2) + "\n", out);
          std::cout << j["target"].get<std::string>() << ": " << j["verdict"].dump() << '\n';
        }
      }
      if (!expect.empty()) {
        const auto& v = j.at("verdict");
        const std::string got = v.contains("h") ? "h=" + std::to_string(v["h"].get<unsigned>()) : "inconclusive";
        if (got != expect) {
          std::cerr << "expected " << expect << ", got " << got << '\n';
          return 1;
        }
      }
    }
  } catch (const std::exception& e) {
    // malformed input that slipped past the option parser
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
