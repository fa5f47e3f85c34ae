#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout (stderr discarded).
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + std::string(LIE_CONTRACT_BIN) + "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lie_contract_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    ASSERT_EQ(run("catalog show su2 --out '" + path("su2.json") + "'").code, 0);
    ASSERT_EQ(run("catalog show heisenberg3 --out '" + path("h3.json") + "'").code, 0);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, CatalogList) {
  const auto r = run("catalog list");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "su2\nheisenberg3\neuclid2\nsl2r\nabelian_n\n");
}

TEST_F(Cli, CheckJacobi) {
  const auto r = run("check-jacobi '" + path("su2.json") + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("jacobi_residual 0.000000000000e+00"), std::string::npos) << r.out;
  std::ofstream(path("bad.json")) << R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "out": {"2": 1}}, {"i": 0, "j": 2, "out": {"0": 1}}]})";
  EXPECT_EQ(run("check-jacobi '" + path("bad.json") + "'").code, 2);
}

TEST_F(Cli, Classify) {
  EXPECT_EQ(run("classify '" + path("su2.json") + "' --u 0,0,1").out, "IW_VALID\n");
  EXPECT_EQ(run("classify '" + path("su2.json") + "' --u 1,1,0").out, "ANTI_IW_VALID\n");
  EXPECT_EQ(run("classify '" + path("su2.json") + "' --u 0,1,2").out, "NEITHER\n");
  const auto both = run("classify '" + path("su2.json") + "' --u 0,0,0 --report");
  EXPECT_EQ(both.code, 0);
  EXPECT_EQ(both.out.rfind("BOTH\n", 0), 0u);
  EXPECT_NE(both.out.find("anti-IW contraction"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("classify '" + path("su2.json") + "' --u 0,0").code, 2);
  EXPECT_EQ(run("contract '" + path("su2.json") + "' --u 0,1,2 --variant iw").code, 2);
  EXPECT_EQ(run("classify '" + path("su2.json") + "' --u 0,0,1 --no-such-flag").code, 64);
  EXPECT_EQ(run("no-such-command").code, 64);
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("check-jacobi '" + path("missing.json") + "'").code, 66);
  std::ofstream(path("garbage.json")) << "{ nope";
  EXPECT_EQ(run("check-jacobi '" + path("garbage.json") + "'").code, 66);
}

TEST_F(Cli, ContractAntiGivesHeisenberg) {
  const auto r = run("contract '" + path("su2.json") + "' --u 1,1,0 --variant anti --out '" + path("out.json") + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(path("out.json")), slurp(path("h3.json")));
}

TEST_F(Cli, LimitSweepCsv) {
  const std::string csv = path("sweep.csv");
  const auto r = run("limit-sweep '" + path("su2.json") + "' --u 0,0,1 --variant iw --eps-from 1e-1 --eps-to 1e-6 --steps 6 --csv '" + csv + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const std::string text = slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "eps,max_error,e1_e2,e1_e3,e2_e3");
  EXPECT_NE(text.find("1.000000000000e-01,1.000000000000e-02,1.000000000000e-02,0.000000000000e+00,0.000000000000e+00"),
            std::string::npos)
      << text;
  // csv plus report
  const auto both = run("limit-sweep '" + path("su2.json") + "' --u 0,0,1 --csv '" + csv + "' --report");
  EXPECT_NE(both.out.find("verdict converged"), std::string::npos);
}

TEST_F(Cli, CsvIsByteIdentical) {
  for (const std::string args :
       {"su2h mn-sweep --lambda 1 --g 0.5,0,0 --spins 10,20,40 --block 5 --jobs 3 --csv ",
        "su2h transition --lambda 1 --radius 1 --eps-from 1e-1 --eps-to 1e-3 --csv "}) {
    ASSERT_EQ(run(args + "'" + path("a.csv") + "'").code, 0);
    ASSERT_EQ(run(args + "'" + path("b.csv") + "'").code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  }
  ASSERT_EQ(run("su2h mn-sweep --g 0.5,0,0 --spins 10,20,40 --jobs 1 --csv '" + path("c.csv") + "'").code, 0);
  EXPECT_EQ(slurp(path("a.csv")).empty(), false);
}

TEST_F(Cli, MnSweepColumnsAndJobsIndependence) {
  ASSERT_EQ(run("su2h mn-sweep --g 0,0,1 --spins 10,20 --jobs 1 --csv '" + path("one.csv") + "'").code, 0);
  ASSERT_EQ(run("su2h mn-sweep --g 0,0,1 --spins 10,20 --jobs 2 --csv '" + path("two.csv") + "'").code, 0);
  const std::string text = slurp(path("one.csv"));
  EXPECT_EQ(text.substr(0, text.find('\n')), "s,eps,error");
  EXPECT_EQ(text, slurp(path("two.csv")));
}

TEST_F(Cli, TransitionReport) {
  const auto r = run("su2h transition --lambda 1 --radius 1 --eps-from 1e-1 --eps-to 1e-4 --report");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("winning_c 2"), std::string::npos) << r.out;
}

TEST_F(Cli, OrbitDeform) {
  std::ofstream(path("flows.json")) << R"([{"X": [1, 0, 0], "t": 0.5}])";
  const auto r = run("orbit-deform '" + path("h3.json") + "' '" + path("su2.json") +
                     "' --u 1,1,0 --variant anti --mu 0,0,1 --eps 1e-3 --flows '" + path("flows.json") + "' --csv '" +
                     path("orbit.csv") + "'");
  EXPECT_EQ(r.code, 0);
  const std::string text = slurp(path("orbit.csv"));
  EXPECT_EQ(text.substr(0, text.find('\n')), "point,t,x_1,x_2,x_3,mu_1,mu_2,mu_3,limit_1,limit_2,limit_3,distance");
  EXPECT_EQ(run("orbit-deform '" + path("h3.json") + "' '" + path("su2.json") +
                "' --u 1,1,0 --variant anti --mu 0,0,1 --flows '" + path("nope.json") + "'")
                .code,
            66);
}

TEST_F(Cli, IntegralityAndQuantize) {
  const auto r = run("integrality --spin 1 --grid 128x256");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("quantizable true"), std::string::npos);
  EXPECT_NE(run("integrality --spin 0.3").out.find("quantizable false"), std::string::npos);
  EXPECT_EQ(run("integrality --spin 1 --grid 8x8").code, 2);
  EXPECT_EQ(run("integrality --spin 1 --grid banana").code, 2);
  const auto q = run("quantize-sphere --spin 2 --report");
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("dimension 5"), std::string::npos);
  EXPECT_EQ(run("quantize-sphere --spin 0.3").code, 2);
}

TEST_F(Cli, ToleranceFromEnvironment) {
  // A perturbed su2 passes only with a looser Jacobi tolerance.
  std::ofstream(path("noisy.json"))
      << R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "out": {"2": 1.0}}, {"i": 1, "j": 2, "out": {"0": 1.0}}, {"i": 0, "j": 2, "out": {"1": -1.0, "0": 1e-9}}]})";
  EXPECT_EQ(run("check-jacobi '" + path("noisy.json") + "'").code, 2);
  EXPECT_EQ(run("check-jacobi '" + path("noisy.json") + "'", "LIE_CONTRACT_TOL=1e-6").code, 0);
  EXPECT_EQ(run("catalog list", "LIE_CONTRACT_TOL=banana").code, 2);
}

TEST_F(Cli, HelpListsFlags) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"catalog", {"list", "show"}},
      {"check-jacobi", {"file"}},
      {"iw-tensor", {"--u"}},
      {"classify", {"--u", "--report"}},
      {"contract", {"--u", "--variant", "--powers", "--out"}},
      {"limit-sweep", {"--u", "--variant", "--powers", "--eps-from", "--eps-to", "--steps", "--csv", "--report"}},
      {"orbit-deform", {"--u", "--variant", "--mu", "--eps", "--flows", "--csv"}},
      {"integrality", {"--spin", "--grid", "--hbar"}},
      {"quantize-sphere", {"--spin", "--hbar", "--report"}},
      {"su2h mn-sweep", {"--lambda", "--g", "--spins", "--block", "--coupling", "--cutoff", "--jobs", "--csv"}},
      {"su2h transition", {"--lambda", "--radius", "--eps-from", "--eps-to", "--steps", "--csv"}},
  };
  for (const auto& [cmd, flags] : cases) {
    const auto r = run(cmd + " --help");
    EXPECT_EQ(r.code, 0) << cmd;
    for (const auto& f : flags) EXPECT_NE(r.out.find(f), std::string::npos) << cmd << " missing " << f;
  }
}
