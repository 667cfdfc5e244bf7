#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
  int rc;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "superfrob");
  std::ostringstream out, err;
  int rc = sfrob::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::vector<std::string> kFlagship = {
    "weight", "--mu", "(2,1,1);(3,2,2,1);(4,3,1)", "--params", "1|1,1|2,1|3",
    "--sequence", "1,3,2,4,6,7,9,2,2,5,4,7,8,6,5,7,3,4,6,8", "--diagnostic"};

}  // namespace

TEST(Cli, SmallestVerifyPasses) {
  auto r = run({"verify", "--m", "1", "--n", "2", "--suite", "frobenius"});
  EXPECT_EQ(r.rc, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "PASS frobenius"));
}

TEST(Cli, FlagshipWeight) {
  auto r = run(kFlagship);
  EXPECT_EQ(r.rc, 0);
  EXPECT_TRUE(contains(r.out, "strict: 0"));
  EXPECT_TRUE(contains(r.out, "diagnostic: q^-2*Q1^3*Q2^4*Q3^13"));
  EXPECT_TRUE(contains(r.out, "(8,6,5,7) is not up-down"));
}

TEST(Cli, TextAndJsonCarryTheSameData) {
  auto text = run(kFlagship);
  auto args = kFlagship;
  args.push_back("--json");
  auto js = run(args);
  ASSERT_EQ(js.rc, 0);
  auto j = nlohmann::json::parse(js.out);
  EXPECT_TRUE(contains(text.out, "strict: " + j["strict"]["text"].get<std::string>()));
  EXPECT_TRUE(contains(text.out, "diagnostic: " + j["diagnostic"]["text"].get<std::string>()));
  EXPECT_TRUE(contains(text.out, j["explanation"].get<std::string>()));
}

TEST(Cli, LiteralInsertionExample) {
  auto r = run({"rsk", "--strategy", "literal", "--sequence", "y1.1,x2.1,x2.1,x1.1,x3.1,y1.1,y1.1,y3.1,y2.1", "--m", "1",
                "--params", "3|3"});
  EXPECT_EQ(r.rc, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "S: x1.1,x2.1,x2.1,y1.1,y2.1/x3.1,y1.1,y3.1/y1.1"));
  EXPECT_TRUE(contains(r.out, "T: 1,2,3,4,8/5,6,9/7"));
}

TEST(Cli, TraceEmitsOneJsonLinePerStep) {
  auto r = run({"rsk", "--params", "1|1", "--sequence", "2,1,1", "--trace"});
  EXPECT_EQ(r.rc, 0);
  std::istringstream in(r.out);
  int json_lines = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] == '{') {
      ++json_lines;
      EXPECT_TRUE(nlohmann::json::accept(line));
    }
  EXPECT_EQ(json_lines, 3);
}

TEST(Cli, EnumAndQmu) {
  auto e = run({"enum", "--multipartitions", "2", "--m", "2"});
  EXPECT_EQ(e.rc, 0);
  EXPECT_EQ(e.out, "(2);-\n(1,1);-\n(1);(1)\n-;(2)\n-;(1,1)\n# 5 multipartitions\n");
  auto q = run({"qmu", "--mu", "(2)", "--params", "1|1"});
  EXPECT_EQ(q.out, "q*Q1*x1^2 - (q*Q1 - q^-1*Q1)*x1*y1 - q^-1*Q1*y1^2\n");
  auto s = run({"enum", "--sstd", "(1,1)", "--params", "1|1"});
  EXPECT_EQ(s.out, "x1.1/y1.1\ny1.1/y1.1\n# 2 hook_tableaux\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).rc, 2);
  EXPECT_EQ(run({"frobnicate"}).rc, 2);
  EXPECT_EQ(run({"qmu", "--mu", "(1,2)", "--params", "1|1"}).rc, 2);
  EXPECT_EQ(run({"qmu", "--mu", "(1)", "--params", "1|x"}).rc, 2);
  EXPECT_EQ(run({"chartable", "--m", "2", "--n", "2", "--params", "1|1"}).rc, 2);
  EXPECT_EQ(run({"rsk", "--params", "1|1", "--sequence", "1,7"}).rc, 2);
  EXPECT_EQ(run({"rsk", "--params", "1|1", "--sequence", "1", "--strategy", "sideways"}).rc, 2);
  auto r = run({"weight", "--mu", "(3)", "--params", "1|1", "--sequence", "1,2"});
  EXPECT_EQ(r.rc, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, GuardRefusal) {
  auto r = run({"chartable", "--m", "1", "--n", "9"});
  EXPECT_EQ(r.rc, 3);
  EXPECT_TRUE(contains(r.err, "--force"));
  EXPECT_EQ(run({"verify", "--m", "4", "--n", "8"}).rc, 3);
}

TEST(Cli, VerificationFailureExitCode) {
  auto r = run({"verify", "--m", "1", "--n", "3", "--suite", "transport"});
  EXPECT_EQ(r.rc, 1);
  EXPECT_TRUE(contains(r.out, "FAIL transport"));
  EXPECT_EQ(run({"chartable", "--m", "1", "--n", "2", "--strategy", "literal"}).rc, 1);
}

TEST(Cli, CacheDirRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "superfrob-cli-test-cache";
  std::filesystem::remove_all(dir);
  auto first = run({"chartable", "--m", "2", "--n", "2", "--cache-dir", dir.string()});
  ASSERT_EQ(first.rc, 0);
  int files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1);
  auto second = run({"chartable", "--m", "2", "--n", "2", "--cache-dir", dir.string()});
  EXPECT_EQ(second.out, first.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, DeterministicOutput) {
  std::vector<std::string> args = {"verify", "--m", "2", "--n", "2", "--suite", "ring", "--seed", "9"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto t1 = run({"chartable", "--m", "1", "--n", "3", "--specialize"});
  auto t2 = run({"chartable", "--m", "1", "--n", "3", "--specialize"});
  EXPECT_EQ(t1.out, t2.out);
}
