// Runs the built command-line tool and checks exit statuses and outputs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PCFOSC_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Table) {
  const auto r = run("table --n 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4 | z^4 - 6 z^2 + 3"), std::string::npos);
  EXPECT_EQ(run("table --n 500").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("nonsense").status, 2);
  EXPECT_EQ(run("spectrum --mu -1").status, 2);
  EXPECT_EQ(run("verify --suite bogus").status, 2);
  EXPECT_EQ(run("lj --delta-e 0").status, 2);
  EXPECT_EQ(run("figure1 --lo 1 --hi 0").status, 2);
}

TEST(Cli, EvalAndSpectrum) {
  EXPECT_EQ(run("eval --n 0 --x 0").out, "n,x,psi\n0,0,0.751125544465\n");
  EXPECT_EQ(run("eval --n 2 --z 0").out, "n,z,D_n\n2,0,-1\n");
  EXPECT_EQ(run("eval --n 0 --x -1 --q 1 --efield 1").out, "n,x,psi\n0,-1,0.751125544465\n");
  EXPECT_EQ(run("spectrum --n 2 --omega 2").out, "n,E_n\n0,1\n1,3\n2,5\n");
}

TEST(Cli, FieldAndLj) {
  const auto f = run("field --q 1 --efield 1 --gamma-sq 1 --m-max 1");
  EXPECT_EQ(f.status, 0);
  EXPECT_NE(f.out.find("x_min,-1\ne_min,-0.5"), std::string::npos);
  EXPECT_NE(f.out.find("m,E_m,pcf_index\n-1,-0.5,0\n0,0.5,1\n1,1.5,2\n"), std::string::npos);
  const auto l = run("lj --gamma-sq 2 --delta-e 0.3");
  EXPECT_EQ(l.status, 0);
  EXPECT_NE(l.out.find("m,E_m\n-2,-0.75\n-1,-0.25\n"), std::string::npos);
  EXPECT_NE(l.out.find("estimated_gamma_sq,3"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto free = run("verify --suite free");
  EXPECT_EQ(free.status, 0);
  EXPECT_NE(free.out.find("overlap off-diagonal"), std::string::npos);
  const auto lj = run("verify --suite lj --gamma-sq 2");
  EXPECT_EQ(lj.status, 0);
  EXPECT_NE(lj.out.find("gamma^2=2): -0.75 -0.25"), std::string::npos);
  EXPECT_EQ(run("verify --suite field --gamma-sq 1").status, 0);
}

TEST(Cli, FiguresAreWrittenAndDeterministic) {
  ASSERT_EQ(run("figure1 --out cli_fig1_a.csv").status, 0);
  ASSERT_EQ(run("figure1 --out cli_fig1_b.csv").status, 0);
  const std::string a = slurp("cli_fig1_a.csv");
  EXPECT_EQ(a, slurp("cli_fig1_b.csv"));
  EXPECT_NE(a.find("\n0,1,0,-1,0\n"), std::string::npos);

  ASSERT_EQ(run("figure2 --out cli_fig2.csv").status, 0);
  EXPECT_EQ(slurp("cli_fig2_levels.csv"), "m,E_m\n-4,-0.875\n-3,-0.625\n-2,-0.375\n-1,-0.125\n");
  ASSERT_EQ(run("figure2 --out cli_fig2_fit.csv --levels-out cli_levels_fit.csv --k-from-fit").status, 0);
  EXPECT_NE(slurp("cli_fig2_fit.csv"), slurp("cli_fig2.csv"));
}

TEST(Cli, UnwritablePathIsIoError) {
  EXPECT_EQ(run("figure1 --out /nonexistent-dir/x.csv").status, 3);
  EXPECT_EQ(run("figure2 --out /nonexistent-dir/x.csv").status, 3);
}
