#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string err_path = ::testing::TempDir() + "sps_cli_stderr.txt";
  const std::string cmd = env + " " SPS_BINARY " " + args + " 2>" + err_path;
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

std::string data(const std::string& name) { return std::string(SPS_TEST_DATA) + "/" + name; }

}  // namespace

TEST(CliPit, PlantedZeroExitsZero) {
  const CliRun r = run("pit " + data("planted_zero.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["command"], "pit");
  EXPECT_TRUE(j["verdict"]["is_zero"].get<bool>());
  EXPECT_TRUE(j.contains("timings_ms"));
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
}

TEST(CliPit, XSquaredPlusOneExitsOne) {
  const CliRun r = run("pit " + data("x2_plus_1.json") + " --no-timings");
  ASSERT_EQ(r.code, 1) << r.err;
  const auto j = r.json();
  EXPECT_FALSE(j["verdict"]["is_zero"].get<bool>());
  const auto& last = j["verdict"]["trace"].back();
  EXPECT_FALSE(last["passed"].get<bool>());
  EXPECT_EQ(last["leading_sum"], "1");
  EXPECT_FALSE(j.contains("timings_ms"));
}

TEST(CliPit, ExactOracleSameVerdict) {
  EXPECT_EQ(run("pit --oracle exact " + data("planted_zero.json")).code, 0);
  EXPECT_EQ(run("pit --oracle exact " + data("x2_plus_1.json")).code, 1);
  EXPECT_EQ(run("pit --oracle exact " + data("k2_m1_t2.json")).code, 1);
}

TEST(CliPit, KroneckerDegreeTooSmall) {
  const CliRun r = run("pit " + data("two_var.json") + " --kronecker-degree 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("degree bound too small"), std::string::npos) << r.err;
  EXPECT_EQ(run("pit " + data("two_var.json") + " --kronecker-degree 9").code, 0);
  EXPECT_EQ(run("pit " + data("two_var.json")).code, 0);
}

TEST(CliPit, ParseErrorNamesPath) {
  const CliRun r = run("pit " + data("bad_alpha.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/terms/1/alphas/0"), std::string::npos) << r.err;
  EXPECT_EQ(r.json()["error"]["path"], "/terms/1/alphas/0");
}

TEST(CliPit, ValidationViolationsVerbatim) {
  const CliRun r = run("pit " + data("zero_factor.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("factor 1 is the zero polynomial"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("term 2: expected 2 exponents, got 1"), std::string::npos) << r.err;
}

TEST(CliPit, MissingFileIsError) { EXPECT_EQ(run("pit " + data("does_not_exist.json")).code, 2); }

TEST(CliBounds, TwoTermInstance) {
  const CliRun r = run("bounds " + data("k2_m1_t2.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto b = r.json()["bounds"];
  EXPECT_EQ(b["naive_bound"], "20");
  EXPECT_TRUE(b["descartes"].is_null());
}

TEST(CliBounds, SingleTermHasDescartes) {
  const auto b = run("bounds " + data("x2_plus_1.json")).json()["bounds"];
  EXPECT_EQ(b["descartes"], "3");
  EXPECT_EQ(b["sps1_bound"], "3");
}

TEST(CliBounds, AlphaIndependentSection) {
  const auto a = run("bounds " + data("k2_m1_t2.json")).json()["bounds"];
  const auto b = run("bounds " + data("k2_m1_t2_big_alpha.json")).json()["bounds"];
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(CliBounds, ExactSumsetsSwitch) {
  const auto on = run("bounds --exact-sumsets " + data("many_terms.json")).json();
  const auto off = run("bounds " + data("many_terms.json") + " --exact-sumsets off").json();
  EXPECT_TRUE(on["exact_sumsets"].get<bool>());
  EXPECT_FALSE(off["exact_sumsets"].get<bool>());
  EXPECT_FALSE(on["bounds"]["exact_sumset_sizes"].is_null());
  EXPECT_TRUE(off["bounds"]["exact_sumset_sizes"].is_null());
}

TEST(CliBounds, EnvironmentSumsetCap) {
  const auto j = run("bounds " + data("many_terms.json"), "SPS_MAX_SUMSET=5").json();
  EXPECT_TRUE(j["bounds"]["sumset_cap_exceeded"].get<bool>());
  EXPECT_EQ(run("bounds " + data("many_terms.json"), "SPS_MAX_SUMSET=abc").code, 2);
}

TEST(CliBounds, MultivariateRejected) { EXPECT_EQ(run("bounds " + data("two_var.json")).code, 2); }

TEST(CliVerify, PwFixture) {
  const CliRun r = run("verify --pw 3");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["verify"]["sturm_roots"], "8");
  EXPECT_EQ(run("verify --pw 4").json()["verify"]["sturm_roots"], "16");
  EXPECT_EQ(run("verify --pw 9").code, 2);
}

TEST(CliVerify, PlantedZero) {
  const CliRun r = run("verify " + data("planted_zero.json") + " --seed 5");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["seed"], "5");
  EXPECT_EQ(j["verify"]["expanded_sparsity"], "0");
  EXPECT_TRUE(j["verify"]["agreement"].get<bool>());
  for (const auto& c : j["verify"]["identity_checks"]) EXPECT_EQ(c["status"], "pass");
}

TEST(CliVerify, OversizedExpansionRefused) {
  const CliRun r = run("verify " + data("headroom.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["verify"]["expansion"]["status"], "refused");
  EXPECT_TRUE(j["verify"]["expanded_sparsity"].is_null());
  EXPECT_TRUE(j["verdict"]["is_zero"].get<bool>());
  EXPECT_TRUE(j["verify"]["agreement"].is_null());
}

TEST(CliVerify, MaxExpandOption) {
  const auto j = run("verify " + data("k2_m1_t2.json") + " --max-expand 3").json();
  EXPECT_EQ(j["verify"]["expansion"]["status"], "refused");
  EXPECT_EQ(j["verify"]["identity_checks"][0]["status"], "refused");
}

TEST(CliVerify, MultivariateInput) {
  const CliRun r = run("verify " + data("two_var.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.json()["verify"]["multivariate_expansion"]["is_zero"].get<bool>());
}

TEST(CliVerify, NeedsInput) { EXPECT_EQ(run("verify").code, 2); }

TEST(Cli, ReportsAreDeterministic) {
  for (const std::string args : {"verify " + data("k2_m1_t2.json") + " --seed 3 --no-timings",
                                 "pit " + data("two_var.json") + " --no-timings",
                                 "bounds " + data("many_terms.json") + " --no-timings"}) {
    EXPECT_EQ(run(args).out, run(args).out) << args;
  }
}
