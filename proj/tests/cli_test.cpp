// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spinchain/cli.hpp"
#include "spinchain/serialize.hpp"

namespace spinchain {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, LrExample) {
  auto r = run({"lr", "--mu", "1", "--nu", "2,1", "--n", "4", "--k", "2", "--q", "formal"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  auto table = table_from_json(j["table"].dump());
  EXPECT_EQ(table.at({2, 2}), QPoly(1));
  EXPECT_EQ(table.at({}), QPoly::q());
  EXPECT_EQ(table.entries.size(), 2u);
}

TEST(Cli, CharacterExample) {
  auto r = run({"character", "--mu", "2,1", "--shape", "2,1", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["value"]["coeff"], nlohmann::json::array());
  EXPECT_TRUE(j["oracle"]["agree"].get<bool>());
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["k"], 3);
}

TEST(Cli, KostkaExample) {
  auto r = run({"kostka", "--shape", "3", "--weight", "3", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["value"]["coeff"], nlohmann::json::array({1}));
  EXPECT_TRUE(j["oracle"]["agree"].get<bool>());
}

TEST(Cli, SkewKostkaWithComposition) {
  auto r = run({"kostka", "--shape", "3,2/1", "--weight", "1,2,1", "--oracle", "--format", "table"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("oracle agrees"), std::string::npos);
}

TEST(Cli, LrOracleWholeTable) {
  auto r = run({"lr", "--mu", "2,1", "--nu", "2,1", "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["n"], 12);
  bool saw_two = false;
  for (const auto& e : j["oracle"]["entries"]) saw_two = saw_two || (e["lambda"] == "3,2,1" && e["oracle"] == 2);
  EXPECT_TRUE(saw_two);
}

TEST(Cli, NumericTwist) {
  auto r = run({"lr", "--mu", "1", "--nu", "2,1", "--n", "4", "--k", "2", "--q", "-1", "--lambda", ""});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["value"]["value"][0].get<double>(), -1.0);
}

TEST(Cli, TruncationWarning) {
  auto r = run({"lr", "--mu", "2", "--nu", "1", "--n", "4", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, VerifySuites) {
  auto all = run({"verify", "--suite", "all", "--n", "6", "--k", "3"});
  EXPECT_EQ(all.code, 0) << all.out;
  EXPECT_TRUE(parse(all)["pass"].get<bool>());
  EXPECT_NE(all.err.find("residual"), std::string::npos);
  auto bvi = run({"verify", "--suite", "bvi", "--n", "4", "--k", "2"});
  EXPECT_EQ(bvi.code, 0);
  EXPECT_EQ(parse(bvi)["checks"][0]["instances"], 216);
  auto xxz = run({"verify", "--suite", "xxz", "--n", "4"});
  EXPECT_EQ(xxz.code, 0);
  auto jx = parse(xxz);
  for (const auto& c : jx["checks"]) EXPECT_LT(c["residual"].get<double>(), c["tolerance"].get<double>());
  auto fly = run({"verify", "--suite", "butterfly", "--n", "6", "--k", "3"});
  EXPECT_EQ(fly.code, 2);
}

TEST(Cli, BviCommand) {
  auto r = run({"bvi", "--mu", "1", "--nu", "2,1", "--n", "4", "--k", "2", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_NEAR(j["values"][0]["value"][0].get<double>(), -1.0, 1e-10);
}

TEST(Cli, SchurEval) {
  auto r = run({"schur-eval", "--shape", "2,1", "--x", "1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = parse(r);
  for (const char* m : {"bialternant", "jacobi-trudi-h", "jacobi-trudi-e", "ssyt-sum"})
    EXPECT_NEAR(j["values"][m][0].get<double>(), 60.0, 1e-10);
  EXPECT_EQ(run({"schur-eval", "--shape", "2,1", "--x", "1,1", "--method", "bialternant"}).code, 2);
}

TEST(Cli, SampleIqpDeterministic) {
  std::string path = std::string(SPINCHAIN_TEST_TMPDIR) + "/phases.txt";
  {
    std::ofstream f(path);
    f << "[0.1, 0.9, 2.3, 0.4, 1.7, 3.0]\n";
  }
  std::vector<std::string> args{"sample-iqp", "--n", "4", "--k", "2", "--phases-file", path, "--samples", "500",
                                "--seed", "42"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::int64_t total = 0;
  auto ja = parse(a);
  for (const auto& o : ja["outcomes"]) total += o["count"].get<std::int64_t>();
  EXPECT_EQ(total, 500);
  auto id = run({"sample-iqp", "--n", "4", "--k", "2", "--input", "0101"});
  ASSERT_EQ(id.code, 0) << id.err;
  auto jid = parse(id);
  for (const auto& o : jid["outcomes"])
    EXPECT_EQ(o["count"].get<std::int64_t>(), o["bits"] == "0101" ? 10000 : 0);
}

TEST(Cli, OutFile) {
  std::string path = std::string(SPINCHAIN_TEST_TMPDIR) + "/out.json";
  auto r = run({"kostka", "--shape", "2,1", "--weight", "1,1,1", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["value"]["coeff"], nlohmann::json::array({2}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"lr", "--mu", "1,2"}).code, 2);
  EXPECT_EQ(run({"lr", "--mu", "1", "--n", "3", "--k", "4"}).code, 2);
  EXPECT_EQ(run({"lr", "--mu", "1", "--n", "40", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"kostka", "--shape", "3", "--weight", "2"}).code, 2);
  EXPECT_EQ(run({"lr", "--mu", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"sample-iqp", "--n", "4", "--k", "2", "--phases-file", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
}

TEST(Cli, OpenChainOracle) {
  EXPECT_EQ(run({"lr", "--mu", "1", "--nu", "1", "--boundary", "open", "--oracle"}).code, 0);
}

TEST(Cli, TwistParsing) {
  EXPECT_FALSE(parse_twist("formal"));
  EXPECT_EQ(*parse_twist("-1"), std::complex<double>(-1, 0));
  EXPECT_EQ(*parse_twist("i"), std::complex<double>(0, 1));
  EXPECT_EQ(*parse_twist("0.5-2i"), std::complex<double>(0.5, -2));
  EXPECT_EQ(*parse_twist("1e-3+1e2i"), std::complex<double>(1e-3, 1e2));
  EXPECT_THROW(parse_twist("abc"), std::exception);
}

TEST(Cli, SizeGuardFromEnvironment) {
  EXPECT_EQ(max_chain_length(), 14);
  setenv("SPINCHAIN_MAX_N", "20", 1);
  EXPECT_EQ(max_chain_length(), 20);
  unsetenv("SPINCHAIN_MAX_N");
}

}  // namespace
}  // namespace spinchain
