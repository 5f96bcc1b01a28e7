#include "cdcheck/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace cdcheck;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Phi) {
  EXPECT_EQ(run({"phi", "12", "2"}).out, "q^4-q^2+1 = 13\n");
  EXPECT_EQ(run({"phi", "1", "2"}).out, "q-1 = 1\n");
  EXPECT_EQ(run({"phi", "18", "3"}).out, "q^6-q^3+1 = 703\n");
  EXPECT_EQ(run({"phi", "0", "2"}).code, cli::exit_usage);
  EXPECT_EQ(run({"phi", "3", "1"}).code, cli::exit_usage);
  EXPECT_EQ(run({"phi", "x", "2"}).code, cli::exit_usage);
  EXPECT_EQ(run({"phi", "3"}).code, cli::exit_usage);
}

TEST(Cli, Ppd) {
  EXPECT_EQ(run({"ppd", "6", "2"}).out, "none: Zsigmondy exception (2,6)\n");
  EXPECT_EQ(run({"ppd", "12", "2"}).out, "13\n");
  EXPECT_EQ(run({"ppd", "30", "2"}).out, "331\n");
  EXPECT_EQ(run({"ppd", "5", "1"}).code, cli::exit_usage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::exit_usage);
  EXPECT_EQ(run({"verify", "--family", "G2"}).code, cli::exit_usage);
  EXPECT_EQ(run({"verify", "--output", "xml"}).code, cli::exit_usage);
  EXPECT_EQ(run({"verify", "--clause", "nothing.here"}).code, cli::exit_usage);
  EXPECT_EQ(run({"verify", "--catalog", "/nonexistent.json"}).code,
            cli::exit_usage);
  EXPECT_EQ(run({"--help"}).code, cli::exit_pass);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--family", "F4", "--q-max", "16"}).code,
            cli::exit_pass);
  auto low = run({"verify", "--family", "F4", "--q-max", "2"});
  EXPECT_EQ(low.code, cli::exit_usage);
  EXPECT_NE(low.err.find("floor"), std::string::npos);
  EXPECT_EQ(run({"verify", "--clause", "dioph.nagell", "--x-max", "100000",
                 "--m-max", "30"})
                .code,
            cli::exit_pass);
}

TEST(Cli, StrictVacuous) {
  std::vector<std::string> args{"verify", "-f", "E7", "--q-max", "2",
                                "-c",     "E7.x"};
  EXPECT_EQ(run(args).code, cli::exit_pass);
  args.push_back("--strict");
  EXPECT_EQ(run(args).code, cli::exit_vacuous);
}

TEST(Cli, FailingCatalogExitsOne) {
  json j = to_json(load_catalog(Family::F4));
  j["ppart_cap"]["odd"]["a"] = 12;
  std::string path = ::testing::TempDir() + "cdcheck_cli_catalog.json";
  std::ofstream(path) << j.dump();
  auto r = run({"verify", "-f", "F4", "--q-max", "9", "--catalog", path});
  std::remove(path.c_str());
  EXPECT_EQ(r.code, cli::exit_fail);
  EXPECT_NE(r.out.find("FAIL  F4.vi"), std::string::npos);
}

TEST(Cli, TextAndJsonAgree) {
  auto text = run({"verify", "-f", "2E6,E6", "--q-max", "16"});
  auto js = run({"verify", "-f", "2E6,E6", "--q-max", "16", "-o", "json"});
  ASSERT_EQ(text.code, js.code);
  json j = json::parse(js.out);
  std::string rebuilt;
  for (const auto &r : j["reports"]) {
    std::string v = r["verdict"];
    for (auto &c : v)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    rebuilt += v + "  " + r["clause"].get<std::string>() + "\n";
  }
  std::string verdicts;
  std::istringstream in(text.out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("PASS", 0) && line.rfind("FAIL", 0) &&
        line.rfind("VACUOUS", 0))
      continue;
    auto cut = line.find("  [");
    verdicts += line.substr(0, cut) + "\n";
  }
  EXPECT_EQ(verdicts, rebuilt);
}

TEST(Cli, JsonIsDeterministic) {
  std::vector<std::string> a{"verify", "--q-max", "16", "-o", "json",
                             "--x-max", "5000"};
  auto b = a;
  b.insert(b.end(), {"--jobs", "3"});
  std::string first = run(a).out;
  EXPECT_EQ(first, run(a).out);
  EXPECT_EQ(first, run(b).out);
}

TEST(Cli, EnvironmentQMax) {
  ::setenv(cli::q_max_env, "5", 1);
  auto r = run({"verify", "-f", "F4", "-c", "F4.i", "-o", "json"});
  ::setenv(cli::q_max_env, "abc", 1);
  auto bad = run({"verify", "-f", "F4"});
  ::unsetenv(cli::q_max_env);
  ASSERT_EQ(r.code, cli::exit_pass);
  EXPECT_EQ(json::parse(r.out)["reports"][0]["samples"].size(), 3u);
  EXPECT_EQ(bad.code, cli::exit_usage);
}

TEST(Cli, CatalogDump) {
  auto r = run({"catalog", "--family", "E8"});
  ASSERT_EQ(r.code, cli::exit_pass);
  EXPECT_EQ(json::parse(r.out)["family"], "E8");
  auto t = run({"catalog", "-f", "2E6", "-o", "text"});
  EXPECT_NE(t.out.find("φ_{2,4}'  q Phi8 Phi18"), std::string::npos);
}

TEST(Cli, Table2AndNagell) {
  auto t = run({"table2"});
  EXPECT_EQ(t.code, cli::exit_pass);
  EXPECT_NE(t.out.find("PASS  27 groups"), std::string::npos);
  auto n = run({"nagell", "--x-max", "100", "--m-max", "5", "--all"});
  EXPECT_NE(n.out.find("18^2 + 18 + 1 = 7^3"), std::string::npos);
  auto p = run({"nagell"});
  EXPECT_NE(p.out.find("0 solutions"), std::string::npos);
}
