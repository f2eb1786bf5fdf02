#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(DLAKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("closure --n 5").code, 0);
  EXPECT_EQ(run("closure --n 2").code, 2);
  EXPECT_EQ(run("basis").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("basis --n 4 --format yaml").code, 2);
  EXPECT_EQ(run("verify --n 7 --oracle").code, 2);
  EXPECT_EQ(run("reach3 --grid 10").code, 2);
  EXPECT_EQ(run("structure --n 4 --tol -1").code, 2);
}

TEST(Cli, SmallNMessage) {
  const std::string cmd = std::string(DLAKIT_CLI_PATH) + " basis --n 2 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 256> buf{};
  std::string out;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  pclose(pipe);
  EXPECT_NE(out.find("n must be ≥ 3"), std::string::npos) << out;
}

TEST(Cli, BasisJson) {
  const auto j = json_of(run("basis --n 4 --format json"));
  EXPECT_EQ(j["schema"], "dlakit/1");
  EXPECT_EQ(j["dimension"], 11);
  EXPECT_EQ(j["elements"][0]["name"], "Y0");
  EXPECT_EQ(j["elements"][6]["norm_sq"], "2");
}

TEST(Cli, ClosureJson) {
  const CliRun r = run("closure --n 6 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["dimension"], 17);
  EXPECT_EQ(j["verdict"]["passed"], true);
  EXPECT_EQ(j["max_depth"], 10);
  EXPECT_TRUE(j["trace"][0]["produced_by"].is_null());
}

TEST(Cli, StructureJson) {
  const CliRun r = run("structure --n 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["ideals"].size(), 2u);
  EXPECT_EQ(j["ideals"][1]["exact_lambda"], 1);
  EXPECT_EQ(j["ideals"][1]["sx_tilde"]["X"], "1");
  EXPECT_EQ(j["center"]["c1"]["X"], "-1");
}

TEST(Cli, VerifyWithOracle) {
  const CliRun r = run("verify --n 4 --oracle --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["oracle"], true);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Cli, Reach3Json) {
  const CliRun r = run("reach3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_NEAR(j["tau_star"].get<double>(), 1.0, 1e-6);
  EXPECT_EQ(j["family_curve"].size(), 181u);
  EXPECT_EQ(j["a2"], "x^2 - 1");
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"closure --n 7 --format json", "structure --n 5 --format json", "verify --n 5 --seed 3",
                           "reach3 --format json"}) {
    EXPECT_EQ(run(args).out, run(args).out) << args;
  }
  const std::string args = "closure --n 8 --format json";
  EXPECT_EQ(run(args, "DLAKIT_THREADS=1").out, run(args, "DLAKIT_THREADS=4").out);
}
