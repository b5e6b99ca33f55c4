#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "asmo/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "asmo");
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = asmo::cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, ConductorOfDelta) {
  const auto r = run({"conductor", "--spec", "delta"});
  ASSERT_EQ(r.code, asmo::cli::kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "conductor");
  EXPECT_DOUBLE_EQ(doc["result"]["analytic_conductor"].get<double>(), 48.75);
}

TEST(Cli, ConductorFromFile) {
  const auto r = run({"conductor", "--spec", ASMO_DATA_DIR "/delta.json", "--pair", ASMO_DATA_DIR "/delta.json"});
  ASSERT_EQ(r.code, asmo::cli::kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["result"]["report"]["c_pair"].get<double>(), 28392.0);
  EXPECT_TRUE(doc["result"]["report"]["holds"].get<bool>());
}

TEST(Cli, Distinguish) {
  const auto r = run({"distinguish", "--a", "chi5", "--b", "chi13", "--max-n", "100"});
  ASSERT_EQ(r.code, asmo::cli::kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["result"]["first_place"].get<int>(), 3);

  const auto tight = run({"distinguish", "--a", "chi5", "--b", "chi13", "--max-n", "100", "--c", "0.001"});
  EXPECT_EQ(tight.code, asmo::cli::kInconsistent);
}

TEST(Cli, Coefficients) {
  const auto r = run({"coeffs", "--pair", "delta", "delta", "--max-n", "6"});
  ASSERT_EQ(r.code, asmo::cli::kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["result"]["coefficients"][1][1][0].get<double>(), 0.28125, 1e-12);
}

TEST(Cli, UnknownSubcommand) {
  const auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, asmo::cli::kError);
  EXPECT_NE(r.err.find("unknown subcommand"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UnreadableSpec) {
  const auto r = run({"conductor", "--spec", "/nonexistent/spec.json"});
  EXPECT_EQ(r.code, asmo::cli::kError);
  EXPECT_NE(r.err.find("unreadable spec file"), std::string::npos);
}

TEST(Cli, ToleranceOverrides) {
  EXPECT_EQ(run({"--tol-mellin", "1e-15", "mellin", "--s", "2+3i"}).code, asmo::cli::kError);
  EXPECT_EQ(run({"--tol-local", "0", "distinguish", "--a", "chi5", "--b", "chi13"}).code, asmo::cli::kError);
  const auto ok = run({"--tol-mellin", "1e-9", "mellin", "--s", "2+3i"});
  ASSERT_EQ(ok.code, asmo::cli::kOk) << ok.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(ok.out)["tolerances"]["mellin_abs"].get<double>(), 1e-9);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"coeffs", "--pair", "delta", "chi5", "--max-n", "50"},
      {"sum", "--pair", "delta", "delta", "--x", "20", "--T", "100", "--N", "200"},
      {"strip", "--pair", "delta", "delta", "--n", "3"},
      {"gbound", "--pair", "trivial", "trivial", "--n", "2", "--tmax", "50", "--samples", "11"},
      {"mellin", "--s", "-5+100i"},
      {"distinguish", "--a", "trivial", "--b", "chi5"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, asmo::cli::kOk) << c.front() << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c.front();
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "asmo_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run({"--out", path.string(), "strip", "--pair", "trivial", "trivial", "--n", "2"});
  ASSERT_EQ(r.code, asmo::cli::kOk) << r.err;
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_DOUBLE_EQ(doc["result"]["line"]["H"].get<double>(), 2.5);
  std::filesystem::remove(path);
}
