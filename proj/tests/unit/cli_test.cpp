#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

const std::string kFixtures = SQMV_FIXTURE_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sqmv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Row {
  std::vector<std::string> args;
  int code;
  std::string needle;  // must appear in stdout (empty: anything)
};

}  // namespace

// One or more rows per verb: success, verdict failure, usage or input error.
TEST(Cli, ExitCodeMatrix) {
  std::vector<Row> rows = {
      {{"parse", "--", "-(p (+) q)"}, 0, "(- ((+) p q))"},
      {{"parse", "--sig", "w", "(p -> 1) -> 1"}, 0, "(-> (-> p 1) 1)"},
      {{"parse", "p (+) ~q"}, 2, ""},
      {{"parse", "p (+"}, 2, ""},
      {{"print", "--sig", "w", "p -> (q -> r)"}, 0, "p -> q -> r"},
      {{"print", "--sig", "w", "--expand", "p^+"}, 0, "(p -> 1) -> 1"},
      {{"eval", "--model", "square", "p (+) 0", "p=<3/10,1/2>"}, 0, "<3/10,0>"},
      {{"eval", "--model", "square@w", "--sig", "w", "1 -> 1"}, 0, "<0,0>"},
      {{"eval", "--model", "square", "p (+) q", "p=<0,0>"}, 2, ""},
      {{"eval", "--model", "disk", "p", "p=<1,1>"}, 2, ""},
      {{"check-eq", "--model", "square", "--strategy", "random:10000", "--seed", "7", "x (+) y", "y (+) x"}, 0,
       "NO_COUNTEREXAMPLE_FOUND"},
      {{"check-eq", "--model", "square", "--strategy", "grid:4", "x (+) 0", "x"}, 1, "<0,1/2>"},
      {{"check-eq", "--model", "chain:2", "x (+) 0", "x"}, 0, "VALID_EXHAUSTIVE"},
      {{"check-eq", "--model", "square", "--strategy", "exhaustive", "x", "x"}, 2, ""},
      {{"check-eq", "--model", "square", "x"}, 2, ""},
      {{"check-entail", "--model", "square@w", "--strategy", "random:2000", "-p", "p", "p"}, 0, ""},
      {{"check-entail", "--model", "square@w", "--strategy", "random:2000", "p"}, 1, "COUNTERMODEL"},
      {{"check-entail", "--model", "square", "p"}, 2, ""},
      {{"find-countermodel", "--family", "chain:1;flat-standard", "0", "1"}, 1, "chain:1"},
      {{"find-countermodel", "--family", "chain:2;square", "(x (+) 1) (+) 1", "1"}, 0, "NO_COUNTEREXAMPLE_FOUND"},
      {{"find-countermodel", "--family", "chain:9x", "x", "x"}, 2, ""},
      {{"translate", "p (+) q"}, 0, "~p -> q"},
      {{"translate", "--to", "mv", "p -> q"}, 0, "-p (+) q"},
      {{"translate", "--to", "w", "0"}, 0, "1 -> 1"},
      {{"translate", "--model", "chain:1"}, 0, "impl"},
      {{"translate", "--to", "w", "--model", "chain:1@w"}, 2, ""},
      {{"translate", "--to", "xx", "p"}, 2, ""},
      {{"classify", "--model", "product:chain:1,flatten:chain:1:0"}, 0, "quasi strong"},
      {{"classify", "--model", "square"}, 2, ""},
      {{"audit-axioms", "--model", "chain:3"}, 0, ""},
      {{"audit-axioms", "--model", "square", "--strategy", "random:500"}, 0, ""},
      {{"audit-axioms", "--model", "chain:2", "--set", "flat"}, 1, ""},
      {{"audit-axioms", "--model", "chain:2", "--set", "bogus"}, 2, ""},
      {{"check-proof", kFixtures + "/prop4_3_05.sqlp"}, 0, "ACCEPT"},
      {{"check-proof", "--registry", "none", kFixtures + "/prop4_3_05.sqlp"}, 1, "UnknownLemma"},
      {{"check-proof", kFixtures + "/missing.sqlp"}, 2, ""},
      {{"lift-proof", kFixtures + "/lstar/ax_p04.lp"}, 0, "RULE Reg 1"},
      {{"lift-proof", kFixtures + "/prop4_3_05.sqlp"}, 2, ""},
      {{"deregularize", kFixtures + "/prop4_3_05.sqlp"}, 2, ""},
      {{}, 2, ""},
      {{"frobnicate"}, 2, ""},
      {{"--help"}, 0, ""},
  };
  for (const auto& row : rows) {
    auto r = run(row.args);
    std::string shown;
    for (auto& a : row.args) shown += a + " ";
    EXPECT_EQ(r.code, row.code) << shown << "\n" << r.out << r.err;
    if (!row.needle.empty()) EXPECT_NE(r.out.find(row.needle), std::string::npos) << shown << "\n" << r.out;
    if (row.code == 2 && !row.args.empty() && row.args[0] != "--help") EXPECT_FALSE(r.err.empty()) << shown;
  }
}

TEST(Cli, DeregularizeLiftedScript) {
  // lift then deregularize through files
  auto lifted = run({"lift-proof", kFixtures + "/lstar/r1_swap.lp"});
  ASSERT_EQ(lifted.code, 0);
  std::string path = ::testing::TempDir() + "lifted.sqlp";
  {
    std::ofstream f(path);
    f << lifted.out;
  }
  auto d = run({"deregularize", path});
  ASSERT_EQ(d.code, 0) << d.err;
  std::string out_path = ::testing::TempDir() + "dereg.sqlp";
  {
    std::ofstream f(out_path);
    f << d.out;
  }
  auto c = run({"check-proof", "--registry", kFixtures, out_path});
  EXPECT_EQ(c.code, 0) << c.out;
}

TEST(Cli, JsonReport) {
  auto r = run({"--json", "check-eq", "--model", "square", "--strategy", "grid:4", "x (+) 0", "x"});
  ASSERT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "COUNTERMODEL");
  EXPECT_EQ(j["witness"]["valuation"]["x"], "<0,1/2>");
  for (const char* k : {"verdict", "samples", "seed", "witness"}) EXPECT_TRUE(j.contains(k)) << k;

  auto ok = nlohmann::json::parse(
      run({"--json", "check-eq", "--model", "disk", "--strategy", "random:100", "--seed", "4", "--", "x", "--x"}).out);
  EXPECT_EQ(ok["verdict"], "NO_COUNTEREXAMPLE_FOUND");
  EXPECT_EQ(ok["seed"], 4);
  EXPECT_TRUE(ok["witness"].is_null());

  auto p = nlohmann::json::parse(run({"--json", "check-proof", kFixtures + "/prop4_3_03.sqlp"}).out);
  EXPECT_EQ(p["verdict"], "ACCEPT");
  EXPECT_EQ(p["lines"].size(), 8u);
}

TEST(Cli, LeadingMinusNeedsSeparator) {
  EXPECT_EQ(run({"print", "--", "-x (+) y"}).out, "-x (+) y\n");
  EXPECT_EQ(run({"check-eq", "--model", "chain:2", "--", "--x", "x"}).code, 0);
}

TEST(Cli, Deterministic) {
  std::vector<std::vector<std::string>> invocations = {
      {"check-eq", "--model", "disk", "--strategy", "random:3000", "--seed", "12", "x (+) y", "x"},
      {"--json", "check-entail", "--model", "disk@w", "--strategy", "random:3000", "--seed", "3", "-p", "p -> q",
       "q -> p"},
      {"find-countermodel", "--strategy", "random:500", "--seed", "9", "x^+", "x"},
      {"audit-axioms", "--model", "disk@w", "--strategy", "random:300", "--seed", "1"},
  };
  for (const auto& args : invocations) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}

TEST(Cli, SeedChangesSamples) {
  auto a = run({"check-eq", "--model", "disk", "--strategy", "random:3000", "--seed", "1", "x (+) y", "x"});
  auto b = run({"check-eq", "--model", "disk", "--strategy", "random:3000", "--seed", "2", "x (+) y", "x"});
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, FixtureDirFromEnvironment) {
  setenv("SQMV_FIXTURES", "/nowhere", 1);
  EXPECT_EQ(sqmv::cli::fixture_dir(), "/nowhere");
  EXPECT_EQ(run({"check-proof", kFixtures + "/prop4_3_05.sqlp"}).code, 2);
  unsetenv("SQMV_FIXTURES");
  EXPECT_EQ(run({"check-proof", kFixtures + "/prop4_3_05.sqlp"}).code, 0);
}
