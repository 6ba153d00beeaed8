#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "linkgeom/io.hpp"

using linkgeom::Json;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(LINKGEOM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("linkgeom_test_" + name)).string();
}

}  // namespace

TEST(Cli, VerifyConstruction) {
  const CliResult r = run("verify cgs --construct hexagon-helix --quiet");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["trials"][0]["verdict"], "CONFIRMED");
  EXPECT_EQ(j["aggregate"]["confirmed"], 1);
}

TEST(Cli, ConstructThenVerifyFile) {
  const std::string path = temp("hex.json");
  ASSERT_EQ(run("construct hexagon-helix --out " + path).code, 0);
  const CliResult r = run("verify cgs --input " + path + " --quiet");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["trials"][0]["count"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, RandomCampaignIsDeterministicAcrossJobs) {
  const CliResult a = run("verify plane-intersection --random --trials 20 --seed 9 --jobs 1 --quiet");
  const CliResult b = run("verify plane-intersection --random --trials 20 --seed 9 --jobs 4 --quiet");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  const Json ja = Json::parse(a.out);
  const Json jb = Json::parse(b.out);
  EXPECT_EQ(ja["trials"], jb["trials"]);
  EXPECT_EQ(ja["aggregate"], jb["aggregate"]);
  EXPECT_EQ(ja["aggregate"]["trials"], 20);
}

TEST(Cli, InvalidInputExitsTwo) {
  const std::string path = temp("bad.json");
  std::ofstream(path) << R"({"dimension":2,"field":"rational","points":[{"coords":["2/4","1/1"]}]})";
  const CliResult r = run("verify plane-intersection --input " + path + " --quiet");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(Json::parse(r.out)["error"], "MALFORMED_INPUT");
  std::filesystem::remove(path);
  EXPECT_EQ(run("verify cgs --construct moment-curve -n 5 -d 2 --quiet").code, 2);
  EXPECT_EQ(run("construct cone -d 3 --apex 1/1 2/1 0/1 --quiet").code, 2);
  EXPECT_EQ(run("verify no-such-theorem --random").code, 2);
}

TEST(Cli, BudgetExitsThree) {
  const CliResult r = run("tverberg --construct moment-curve -n 7 -d 2 -r 3 --quiet", "LINKGEOM_BUDGET=10");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.out)["error"], "BUDGET_EXCEEDED");
}

TEST(Cli, TverbergCounterexample) {
  const CliResult r = run("tverberg --construct tverberg-counterexample -d 2 -r 3 --quiet");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["certificate"].is_null());
  EXPECT_EQ(j["partitions_examined"], 90);
}

TEST(Cli, CheckEmbedding) {
  const std::string hg = temp("k5.json");
  std::ofstream(hg) << linkgeom::hypergraph_to_json(linkgeom::Hypergraph2::complete(5)).dump();
  const CliResult r = run("check embedding --hypergraph " + hg + " --construct simplex-plus-interior -d 3 --quiet");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["embedded"], true);
  std::filesystem::remove(hg);
}

TEST(Cli, List) {
  const CliResult r = run("list");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("stat-il"), std::string::npos);
}
