#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// stdout only unless with_stderr
Run run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(ODC_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string tmp(const char* name) { return testing::TempDir() + name; }

}  // namespace

TEST(Cli, Factor) {
  EXPECT_EQ(run("factor 1").out, "1 = (empty product)\n");
  EXPECT_EQ(run("factor 20160").out, "20160 = 2^6*3^2*5*7\n");
  EXPECT_EQ(run("factor 0").code, 2);
  EXPECT_EQ(run("factor abc").code, 2);
}

TEST(Cli, UsageErrorsExit2) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("table 8").code, 2);
  EXPECT_EQ(run("mu --family u3").code, 2);
  EXPECT_EQ(run("verify --family u3 --q 2").code, 2);
  EXPECT_EQ(run("mu --family u3 --q 6").code, 2);
}

TEST(Cli, AmbiguousBareQIsRefusedWithHint) {
  const auto r = run("mu --family u3 --q 64", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("2^6"), std::string::npos);
  EXPECT_EQ(run("mu --family u3 --q 2^6").code, 0);
  EXPECT_EQ(run("mu --family u4 --q 49").out, run("mu --family u4 --q 7^2").out);
}

TEST(Cli, MuOrderPattern) {
  EXPECT_EQ(run("mu --family u3 --q 2^6").out, "2^2\n2*5*13\n37*109\n3^2*5*7*13\n");
  EXPECT_EQ(run("order --family u4 --q 7^2").out, "2^11*3^2*5^6*7^12*13*181*1201 = 11265070201783935264000000\n");
  EXPECT_EQ(run("order --group Alt_8").out, "2^6*3^2*5*7 = 20160\n");
  EXPECT_EQ(run("pattern --family u4 --q 61").out, "primes: 2 3 5 7 31 61 523 1861\npattern: (5, 5, 5, 2, 6, 4, 2, 3)\n");
}

TEST(Cli, Tables) {
  const auto t4 = run("table 4");
  EXPECT_EQ(t4.code, 0);
  EXPECT_EQ(lines(t4.out), 12u);  // header + 11 rows
  EXPECT_EQ(run("table 4 --check").code, 1);  // U_3(64) mu is misprinted
  EXPECT_EQ(run("table 5 --check").code, 1);
  EXPECT_EQ(run("table 6 --check").code, 1);
  EXPECT_EQ(run("table 7 --check").code, 0);
  const auto t6 = run("table 6");
  EXPECT_EQ(lines(t6.out), 30u);
  EXPECT_EQ(run("table 6 --parallel").out, t6.out);
  EXPECT_NE(t6.out.find("pattern: printed (5, 5, 3, 4, 2, 3, 1), computed (5, 5, 3, 4, 3, 3, 1)"), std::string::npos);
}

TEST(Cli, GkDot) {
  const auto a = run("gk --family u4 --q 49 --dot --compact");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.rfind("graph U_4(7^2) {", 0), 0u);
  EXPECT_NE(a.out.find("\"13,181\""), std::string::npos);
  EXPECT_EQ(a.out, run("gk --family u4 --q 49 --dot --compact").out);
  const auto path = tmp("u3_61.dot");
  EXPECT_EQ(run("gk --family u3 --q 61 --dot --out " + path).code, 0);
  std::ifstream f(path);
  const std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_NE(text.find("\"7\" -- \"523\""), std::string::npos);
}

TEST(Cli, ScansWrapTheCatalog) {
  EXPECT_EQ(run("lie-scan --r 1201 --allowed-from 'U_4(7^2)'").out, "L_2(7^4)\nB_2(7^2)\nU_4(7^2)\n");
  EXPECT_EQ(run("lie-scan --r 11 --allowed 2,3,5").code, 2);
  const auto c = run("candidates 20160 --required 7");
  EXPECT_EQ(lines(c.out), 5u);
  EXPECT_EQ(c.out.rfind("L_2(7)\t2^3*3*7\n", 0), 0u);
  EXPECT_EQ(run("candidates 2^6*3^2*5*7 --required 7").out, c.out);
}

TEST(Cli, VerifyWritesJsonAndHonoursExpect) {
  const auto r = run("verify --family u4 --q 9");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["target"], "U_4(3^2)");
  EXPECT_EQ(j["verdict"]["h"], 1);
  EXPECT_EQ(run("verify --family u4 --q 9").out, r.out);  // byte-identical reruns

  EXPECT_EQ(run("verify --family u4 --q 3^2 --expect h=1").code, 0);
  EXPECT_EQ(run("verify --family u4 --q 3^2 --expect h=2").code, 1);
  EXPECT_EQ(run("verify --family u4 --q 2 --expect h=2").code, 0);
  EXPECT_EQ(run("verify --family u3 --q 3^3 --expect inconclusive").code, 0);
}

TEST(Cli, ReplayAcceptsAndRejects) {
  const auto path = tmp("u4_49.json");
  const auto r = run("verify --family u4 --q 7^2 --out " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "U_4(7^2): {\"kind\":\"od_characterizable\",\"h\":1,\"source\":\"derived\"}\n");
  EXPECT_EQ(run("verify --replay " + path + " --expect h=1").out, "accepted\n");

  std::ifstream in(path);
  auto j = nlohmann::ordered_json::parse(in);
  j["degree_pattern"][0] = 0;
  const auto bad = tmp("u4_49_bad.json");
  std::ofstream(bad) << j.dump();
  const auto rr = run("verify --replay " + bad);
  EXPECT_EQ(rr.code, 1);
  EXPECT_EQ(rr.out.rfind("rejected", 0), 0u);
  EXPECT_EQ(run("verify --replay /nonexistent.json").code, 2);
}
