#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "akm/qkz.hpp"
#include "akm/states.hpp"

using namespace akm;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("akm_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

int run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(AKM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

nlohmann::json load(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

}  // namespace

TEST(Cli, VerifySuitesPass) {
  fs::path d = scratch_dir("verify");
  EXPECT_EQ(run("verify cylindric --k 3 --n 1 --out " + d.string()), 0);
  EXPECT_EQ(run("verify lemma --k 7 --n 3 --out " + d.string()), 0);
  EXPECT_EQ(run("verify scalars --k 4 --out " + d.string()), 0);
  EXPECT_EQ(run("verify ybe --k 2 --n 2 --out " + d.string()), 0);
  EXPECT_EQ(run("verify qsym --k 2 --n 2 --out " + d.string()), 0);
  auto lemma = load(d / "verify_lemma_k7_n3.json");
  EXPECT_TRUE(lemma["ok"].get<bool>());
  EXPECT_TRUE(lemma["checks"]["methods_agree"].get<bool>());
}

TEST(Cli, StatesReportCarriesDisplayedMatrices) {
  fs::path d = scratch_dir("states");
  ASSERT_EQ(run("verify states --k 3 --n 1 --out " + d.string()), 0);
  auto j = load(d / "verify_states_k3_n1.json");
  StateBasis b = state_basis(3, 1);
  for (int i = 1; i <= 3; ++i) {
    const auto& m = j["checks"]["matrices"]["e" + std::to_string(i)];
    DenseMat e = e_matrix(b, i);
    ASSERT_EQ(m.size(), e.size());
    for (std::size_t r = 0; r < e.size(); ++r)
      for (std::size_t c = 0; c < e.size(); ++c) EXPECT_EQ(m[r][c], e[r][c].to_json());
  }
}

TEST(Cli, DeterministicOutput) {
  fs::path a = scratch_dir("det_a"), b = scratch_dir("det_b");
  for (const auto& d : {a, b}) {
    ASSERT_EQ(run("verify ybe --k 3 --n 1 --seed 4 --out " + d.string()), 0);
    ASSERT_EQ(run("tiling --k 3 --n 2 --path 132213 --out " + d.string()), 0);
  }
  EXPECT_EQ(slurp(a / "verify_ybe_k3_n1.json"), slurp(b / "verify_ybe_k3_n1.json"));
  EXPECT_EQ(slurp(a / "tiling_k3_n2_132213.svg"), slurp(b / "tiling_k3_n2_132213.svg"));
}

TEST(Cli, SolveWritesHighestComponent) {
  fs::path d = scratch_dir("solve");
  ASSERT_EQ(run("solve --k 2 --n 1 --no-cache --out " + d.string()), 0);
  auto j = load(d / "qkz_k2_n1.json");
  EXPECT_EQ(j["components"]["21"], psi_highest(2, 1).to_json());
  EXPECT_FALSE(j["sum_rule_constant"].is_null());
  ASSERT_EQ(run("solve --k 2 --n 2 --no-cache --out " + d.string()), 0);
  EXPECT_EQ(load(d / "qkz_k2_n2.json")["components"].size(), 6u);
}

TEST(Cli, CachedSolveMatchesRecomputed) {
  fs::path d = scratch_dir("cache"), cache = scratch_dir("cache_dir");
  std::string env = "AKM_CACHE_DIR=" + cache.string();
  ASSERT_EQ(run("solve --k 3 --n 1 --out " + d.string(), env), 0);
  EXPECT_TRUE(fs::exists(cache / "qkz_k3_n1_sigma_orbit.json"));
  std::string first = slurp(d / "qkz_k3_n1.json");
  ASSERT_EQ(run("solve --k 3 --n 1 --out " + d.string(), env), 0);
  EXPECT_EQ(slurp(d / "qkz_k3_n1.json"), first);
  ASSERT_EQ(run("solve --k 3 --n 1 --no-cache --out " + d.string(), env), 0);
  EXPECT_EQ(slurp(d / "qkz_k3_n1.json"), first);
}

TEST(Cli, TilingWord) {
  fs::path d = scratch_dir("tiling");
  ASSERT_EQ(run("tiling --k 3 --n 1 --path 321 --out " + d.string()), 0);
  EXPECT_EQ(load(d / "tiling_k3_n1_321.json")["word"], nlohmann::json::parse("[[3,1]]"));
  EXPECT_TRUE(fs::exists(d / "tiling_k3_n1_321.svg"));
  ASSERT_EQ(run("tiling --k 3 --n 2 --path 123123 --out " + d.string()), 0);
  EXPECT_TRUE(load(d / "tiling_k3_n2_123123.json")["rhombi"].empty());
}

TEST(Cli, SumRuleAndPaths) {
  fs::path d = scratch_dir("sumrule");
  ASSERT_EQ(run("sumrule --k 2 --n 2 --out " + d.string()), 0);
  auto j = load(d / "sumrule_k2_n2.json");
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["wheel"].size(), 3u);
  ASSERT_EQ(run("paths --k 3 --n 2 --out " + d.string()), 0);
  EXPECT_EQ(load(d / "paths_k3_n2.json")["count"], 90);
}

TEST(Cli, ExitCodes) {
  fs::path d = scratch_dir("codes");
  EXPECT_EQ(run("verify hecke --k 3 --n 3 --out " + d.string()), 2);
  EXPECT_EQ(run("solve --k 2 --n 4 --out " + d.string()), 2);
  EXPECT_EQ(run("tiling --k 3 --n 1 --path 331 --out " + d.string()), 1);
  EXPECT_EQ(run("verify nosuch --out " + d.string()), 1);
  EXPECT_EQ(run(""), 1);
}
