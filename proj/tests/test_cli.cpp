#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qverma::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qverma_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::size_t count_files(const fs::path& dir) {
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, MatrixFileCounts) {
  const fs::path d = scratch("counts");
  EXPECT_EQ(run({"matrix", "--l", "1", "--T", "2", "--out", (d / "v").string()}).code, 0);
  EXPECT_EQ(count_files(d / "v"), 6u);
  EXPECT_EQ(run({"matrix", "--kind", "loop", "--l", "2", "--T", "2", "--out", (d / "l").string()}).code, 0);
  EXPECT_EQ(count_files(d / "l"), 9u);
  EXPECT_EQ(run({"matrix", "--kind", "limit", "--limit", "post", "--l", "2", "--T", "2", "--out", (d / "p").string()}).code,
            0);
  EXPECT_EQ(count_files(d / "p"), 6u);
  EXPECT_TRUE(fs::exists(d / "p" / "limit_e0.json"));
  EXPECT_EQ(run({"matrix", "--kind", "oscillator", "--l", "2", "--T", "2", "--out", (d / "o").string()}).code, 0);
  EXPECT_EQ(slurp(d / "o" / "oscillator_e1.json").find("\"quotient\""), std::string::npos);
  EXPECT_EQ(run({"matrix", "--kind", "quotient", "--l", "2", "--T", "2", "--out", (d / "q").string()}).code, 0);
  // same entries through both routes
  auto entries = [](const std::string& s) { return s.substr(s.find("\"entries\""), s.find("\"generator\"") - s.find("\"entries\"")); };
  EXPECT_EQ(entries(slurp(d / "o" / "oscillator_e1.json")), entries(slurp(d / "q" / "quotient_e1.json")));
}

TEST(Cli, MatrixIsDeterministic) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const auto& d : {a, b}) {
    ASSERT_EQ(run({"matrix", "--kind", "loop", "--l", "2", "--T", "3", "--weight", "1/2,-1,2", "--spins", "1,0,2", "--out",
                   d.string()})
                  .code,
              0);
  }
  for (const auto& f : fs::directory_iterator(a)) EXPECT_EQ(slurp(f.path()), slurp(b / f.path().filename()));
  const std::string e0 = slurp(a / "loop_e0.json");
  EXPECT_NE(e0.find("zeta"), std::string::npos);
  EXPECT_NE(e0.find("\"root_degree\":2"), std::string::npos);
}

TEST(Cli, NumericExport) {
  const fs::path d = scratch("numeric");
  ASSERT_EQ(run({"matrix", "--l", "1", "--T", "1", "--weight", "1,0", "--generators", "E1", "--numeric", "q=2", "--out",
                 d.string()})
                .code,
            0);
  EXPECT_EQ(count_files(d), 1u);
  const std::string s = slurp(d / "verma_E1.json");
  // E_1 v_1 = [lambda_1 - lambda_2]_q v_0 = [1]_q = 1
  EXPECT_NE(s.find("[0,1,[1.0,0.0]]"), std::string::npos) << s;
}

TEST(Cli, VerifyExitCodes) {
  const Outcome ok = run({"verify", "defining", "--l", "1", "--T", "4"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("\"passed\": true"), std::string::npos);
  const Outcome bad = run({"verify", "defining", "--l", "1", "--T", "4", "--inject-fault"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("\"status\": \"fail\""), std::string::npos);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "defining", "--weight", "1,x"}).code, 2);
  EXPECT_EQ(run({"matrix", "--kind", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "limit", "--l", "1", "--spins", "1,-1"}).code, 2);
  EXPECT_EQ(run({"--l", "0", "verify"}).code, 2);
}

TEST(Cli, ReportIdsAreSortedAndUnique) {
  const fs::path d = scratch("report");
  fs::create_directories(d);
  ASSERT_EQ(run({"verify", "all", "--l", "2", "--T", "3", "--weights", "2", "--report", (d / "r.json").string()}).code, 0);
  const std::string s = slurp(d / "r.json");
  std::vector<std::string> ids;
  for (std::size_t pos = s.find("\"id\": \""); pos != std::string::npos; pos = s.find("\"id\": \"", pos + 1)) {
    const std::size_t b = pos + 7;
    ids.push_back(s.substr(b, s.find('"', b) - b));
  }
  ASSERT_GT(ids.size(), 10u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Cli, ConfigFileAndPrecedence) {
  const fs::path d = scratch("config");
  fs::create_directories(d);
  std::ofstream(d / "c.toml") << "l = 2\nT = 2\nweight = \"1,1/2,-3\"\n";
  const Outcome r = run({"--config", (d / "c.toml").string(), "verify", "defining", "--T", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"rank\": 2"), std::string::npos);
  EXPECT_NE(r.out.find("\"max_degree\": 3"), std::string::npos);
}

TEST(Cli, QuotientAndOscillator) {
  const Outcome q = run({"quotient", "--l", "2", "--p", "1", "--T", "3"});
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_NE(q.out.find("\"quotient_dim\": 6"), std::string::npos);
  EXPECT_EQ(run({"quotient", "--l", "3", "--p", "0,1,0"}).code, 2);
  EXPECT_EQ(run({"quotient", "--l", "3", "--p", "1,0,0", "--T", "3"}).code, 1);
  EXPECT_EQ(run({"quotient", "--l", "3", "--p", "1,0,0", "--T", "3", "--order", "componentwise"}).code, 0);
  EXPECT_EQ(run({"oscillator", "--l", "2", "--T", "3", "--check", "factorization"}).code, 0);
  EXPECT_EQ(run({"limit-check", "--l", "2", "--T", "3", "--weights", "1"}).code, 0);
}
