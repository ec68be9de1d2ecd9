#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

/// Runs the CLI with stderr discarded; `args` is passed to the shell verbatim.
Run svlie(const std::string &args) {
  const std::string cmd = std::string("'") + SVLIE_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
  const auto path = std::filesystem::temp_directory_path() / ("svlie_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST(Cli, BracketPrintsCanonicalValue) {
  const auto r = svlie("bracket --s 1/2 --lambda -1 'L[2]' 'L[-2]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-4*L[0] - 1/2*c\n");
}

TEST(Cli, CybeOnWittR) {
  const auto path = temp_file("witt.r", "# Witt\nL[0] (x) L[1]\n-L[1] (x) L[0]\n");
  const auto r = svlie("cybe --s 0 --lambda 0 --r '" + path.string() + "'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "CYBE: satisfied\n");
  const auto m = svlie("mybe --s 0 --lambda 0 --window 6 --r '" + path.string() + "'");
  EXPECT_EQ(m.status, 0);
  std::filesystem::remove(path);
}

TEST(Cli, CybeViolationExitsOne) {
  const auto path = temp_file("bad.r", "L[-1] (x) L[2] - L[2] (x) L[-1]\n");
  const auto r = svlie("cybe --s 0 --lambda 7 --central false --r '" + path.string() + "'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("violated"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(svlie("frobnicate").status, 2);
  EXPECT_EQ(svlie("bracket 'L[1/3]' 'L[1]'").status, 2);
  EXPECT_EQ(svlie("bracket --lambda 0.5 'L[1]' 'L[2]'").status, 2);
  EXPECT_EQ(svlie("bracket --s 1/3 'L[1]' 'L[2]'").status, 2);
  EXPECT_EQ(svlie("bracket --s 0 'Y[1/2]' 'L[2]'").status, 2);
  EXPECT_EQ(svlie("h1 --window 1000").status, 2);
  EXPECT_EQ(svlie("cybe --r /nonexistent/file.r").status, 2);
  EXPECT_EQ(svlie("").status, 2);
}

TEST(Cli, CheckDerivationFailureHasWitness) {
  const auto path = temp_file(
      "cubic.json",
      R"({"target":"algebra","degree":"0","window":{"lo":-4,"hi":4},
          "values":[{"gen":"L[1]","value":"M[1]"}]})");
  const auto r = svlie("check-derivation --s 0 --lambda 1 --derivation '" + path.string() + "'");
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.out.empty());
  const auto bad = temp_file("bad.json", R"({"target":"algebra"})");
  EXPECT_EQ(svlie("check-derivation --derivation '" + bad.string() + "'").status, 2);
  const auto junk = temp_file("junk.json", "{not json");
  EXPECT_EQ(svlie("check-derivation --derivation '" + junk.string() + "'").status, 2);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
  std::filesystem::remove(junk);
}

TEST(Cli, H1JsonReport) {
  const auto r = svlie("h1 --s 1/2 --lambda 3 --central true --window 8 --degree 0 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(j["dim_h1"], 2);
  EXPECT_EQ(j["case"]["lambda"], "3");
}

TEST(Cli, ThreadBudgetFromEnvironment) {
  const auto a = svlie("h1 --s 0 --lambda 5 --window 8 --json");
  const std::string env = "env SVLIE_THREADS=1 '";
  FILE *pipe = popen((env + SVLIE_CLI_PATH + "' h1 --s 0 --lambda 5 --window 8 --json 2>/dev/null").c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  EXPECT_EQ(out, a.out);
}
