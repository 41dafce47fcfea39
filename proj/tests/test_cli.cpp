#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" MREL_CLI_PATH "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kQuick = "verify --suites algebra,linalg,variants --samples 20 --no-timing";

}  // namespace

TEST(Cli, VerifyPassesWithSchema) {
  const auto r = run_cli(kQuick);
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "mrel-report/1");
  EXPECT_EQ(j["tool_version"], "0.1.0");
  EXPECT_FALSE(j.contains("runtime_ms"));
  const auto& recs = j["records"];
  EXPECT_EQ(j["summary"]["total"].get<int>(), static_cast<int>(recs.size()));
  EXPECT_EQ(j["summary"]["passed"].get<int>(), static_cast<int>(recs.size()));
  EXPECT_EQ(j["summary"]["failed"].get<int>(), 0);
  for (std::size_t k = 1; k < recs.size(); ++k)
    EXPECT_LT(recs[k - 1]["check_id"].get<std::string>(), recs[k]["check_id"].get<std::string>());
}

TEST(Cli, FailingChecksExitOne) {
  const auto r = run_cli("verify --suites fields --samples 5 --tol 1e-30 --no-timing");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["summary"]["failed"].get<int>(), 0);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_cli("verify --suites nope").code, 2);
  EXPECT_EQ(run_cli("verify --beta 1/2").code, 2);
  EXPECT_EQ(run_cli("verify --beta 1").code, 2);
  EXPECT_EQ(run_cli("verify --mode fuzzy").code, 2);
  EXPECT_EQ(run_cli("verify --bogus").code, 2);
  EXPECT_EQ(run_cli("verify --samples 5", "MREL_SEED=x").code, 2);
}

TEST(Cli, Deterministic) {
  const auto a = run_cli(kQuick + " --seed 3");
  const auto b = run_cli(kQuick + " --seed 3");
  EXPECT_EQ(a.out, b.out);
  const auto c = run_cli(kQuick + " --seed 4");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, SeedFromEnvironment) {
  const auto env = run_cli(kQuick, "MREL_SEED=3");
  const auto flag = run_cli(kQuick + " --seed 3");
  EXPECT_EQ(env.out, flag.out);
  EXPECT_EQ(nlohmann::json::parse(env.out)["config"]["seed"], 3);
  EXPECT_EQ(nlohmann::json::parse(run_cli(kQuick).out)["config"]["seed"], 7);
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "mrel_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run_cli(kQuick + " --out " + path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["schema"], "mrel-report/1");
  std::filesystem::remove(path);
}

TEST(Cli, VariantsTable) {
  const auto r = run_cli("variants");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(line);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], "+++  ee=e ei=i ie=-i ii=-e | noncomm nonassoc left-unit e");
  EXPECT_EQ(rows[1], "+-+  ee=e ei=i ie=i ii=e | comm assoc unital");
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli("--help").code, 0); }
