#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kpos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kpos::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KPOS_TEST_DATA_DIR) + "/" + name; }

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(CliRange, Parsing) {
  using kpos::cli::parse_range;
  EXPECT_EQ(parse_range("5"), (std::vector<std::size_t>{5}));
  EXPECT_EQ(parse_range("3..5"), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(parse_range("2,5..6"), (std::vector<std::size_t>{2, 5, 6}));
  EXPECT_THROW(parse_range("5..3"), std::invalid_argument);
  EXPECT_THROW(parse_range("x"), std::invalid_argument);
}

TEST(CliCheck, DiagonalFileIsClean) {
  const auto r = run({"check", data("diagonal3.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  for (const auto& j : lines) {
    EXPECT_EQ(j["format_version"], 1);
    const std::string s = j["status"];
    EXPECT_TRUE(s == "holds" || s == "equality" || s == "inapplicable") << j.dump();
    if (j["statement"] == "hadamard_type" || j["statement"] == "diagonal_identity")
      EXPECT_EQ(s, "equality");
  }
}

TEST(CliCheck, TwoByTwoDiagonalIdentity) {
  const auto r = run({"check", data("two_by_two.txt"), "--k", "2"});
  EXPECT_EQ(r.code, 0);
  bool seen = false;
  for (const auto& j : json_lines(r.out))
    if (j["statement"] == "diagonal_identity") {
      seen = true;
      EXPECT_EQ(j["lhs"], 4.0);
      EXPECT_NEAR(j["rhs"].get<double>(), 3.0, 1e-14);
      EXPECT_NEAR(j["margin"].get<double>(), 1.0 / 4.0, 1e-14);
      EXPECT_EQ(j["status"], "holds");
    }
  EXPECT_TRUE(seen);
}

TEST(CliCheck, MalformedInputExitsOneWithLine) {
  const auto a = run({"check", data("nonsymmetric.txt")});
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.err.find("line"), std::string::npos);
  const auto b = run({"check", data("truncated.txt")});
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.err.find("line 3"), std::string::npos) << b.err;
  EXPECT_EQ(run({"check", data("missing.txt")}).code, 1);
}

TEST(CliCheck, FormatsAndOutFile) {
  const auto csv = run({"check", data("pair.jsonl"), "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "statement,n,k,p,lhs,rhs,margin,status,tolerance_level,seed,trial,note");
  const auto human = run({"check", data("pair.jsonl"), "--format", "human", "--k", "3"});
  EXPECT_NE(human.out.find("Hadamard"), std::string::npos);
  const auto path = (std::filesystem::temp_directory_path() / "kpos_cli_out.jsonl").string();
  const auto f = run({"check", data("two_by_two.txt"), "--out", path});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_FALSE(json_lines(ss.str()).empty());
  std::filesystem::remove(path);
}

TEST(CliSweep, ZeroCountIsEmptyAndClean) {
  const auto r = run({"sweep", "--n", "3..4", "--count", "0"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_TRUE(j["summary"].empty());
  EXPECT_EQ(j["trials"], 0);
}

TEST(CliSweep, DeterministicAcrossRunsAndThreads) {
  const std::vector<std::string> base{"sweep", "--n", "3..5", "--count", "20", "--seed", "99"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  const auto a = with({});
  const auto b = with({});
  const auto c = with({"--threads", "8"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_NE(a.out, with({"--seed", "100"}).out);
  const auto j = nlohmann::json::parse(a.out);
  for (const auto& row : j["summary"]) EXPECT_EQ(row["violated-candidate"], 0) << row.dump();
}

TEST(CliSweep, ReportsStreamAndCsvSummary) {
  const auto path = (std::filesystem::temp_directory_path() / "kpos_sweep_reports.jsonl").string();
  const auto r = run({"sweep", "--n", "4", "--k", "3", "--count", "5", "--reports", path, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 10), "statement,");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto lines = json_lines(ss.str());
  EXPECT_GT(lines.size(), 5u);
  for (const auto& l : lines) EXPECT_FALSE(l["seed_provenance"].is_null());
  std::filesystem::remove(path);
}

TEST(CliConjecture, SkFamilyHasNoCandidates) {
  const auto r = run({"conjecture", "--family", "sk", "--n", "3..5", "--count", "30"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.back()["kind"], "summary");
  EXPECT_EQ(lines.back()["candidates"], 0);
}

TEST(CliConjecture, ProductFamilyAlwaysExitsZero) {
  const auto r = run({"conjecture", "--family", "product", "--n", "4", "--p", "1,3", "--count", "20", "--all"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 41u);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    EXPECT_EQ(lines[i]["format_version"], 1);
    EXPECT_TRUE(lines[i].contains("matrix"));
    EXPECT_FALSE(lines[i]["report"]["seed_provenance"].is_null());
  }
  EXPECT_EQ(run({"conjecture", "--family", "nope"}).code, 1);
}

TEST(CliSample, DumpIsJsonLinesWithProvenance) {
  const auto r = run({"sample", "--n", "4", "--k", "2", "--count", "3", "--profile", "strict", "--seed", "5"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[2]["trial"], 2);
  EXPECT_EQ(lines[0]["seed"], 5);
  EXPECT_EQ(lines[0]["profile"], "strict");
  EXPECT_EQ(run({"sample", "--n", "4", "--k", "4", "--profile", "strict"}).code, 1);
}

TEST(CliEnv, EnvironmentFallback) {
  ::setenv("KPOS_FORMAT", "csv", 1);
  const auto r = run({"sweep", "--n", "3", "--count", "2"});
  ::unsetenv("KPOS_FORMAT");
  EXPECT_EQ(r.out.substr(0, 10), "statement,");
  const auto j = run({"sweep", "--n", "3", "--count", "2", "--format", "json"});
  EXPECT_EQ(j.out.front(), '{');
}

TEST(CliArgs, BadArgumentsExitOne) {
  EXPECT_EQ(run({"sweep", "--n", "40"}).code, 1);
  EXPECT_EQ(run({"sweep", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"sweep", "--tol-rel", "-1"}).code, 1);
}
