// Drives the kerrkick binary end to end: exit codes, flag precedence, output files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef KERRKICK_CLI_PATH
#error "KERRKICK_CLI_PATH must point at the kerrkick executable"
#endif

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

Result run_cli(const std::string& args) {
  const std::string cmd = std::string(KERRKICK_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::string first_lines(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line, out;
  for (int i = 0; i < n && std::getline(in, line); ++i) out += line + "\n";
  return out;
}

TEST(Cli, SimulateToStdout) {
  const auto r = run_cli("run --kicks 3 --cutoff-a 4 --cutoff-b 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(first_lines(r.out, 2),
            "k,P00,P01,P10,P11,leakage,concurrence,F_B1,F_B2,F_B3,F_B4\n0,1,0,0,0,0,0,0.5,0.5,0,0\n");
}

TEST(Cli, ConfigErrorExitCode) {
  EXPECT_EQ(run_cli("run --mode scan").exit_code, 2);
  EXPECT_EQ(run_cli("run --alpha nope").exit_code, 2);
  const auto bad = write_temp("bad.cfg", "alpha = 0.04\nwhatever = 2\n");
  EXPECT_EQ(run_cli("run --config " + bad).exit_code, 2);
  EXPECT_EQ(run_cli("run --config /does/not/exist.cfg").exit_code, 2);
  EXPECT_EQ(run_cli("run --no-such-flag 1").exit_code, 2);
}

TEST(Cli, FlagsOverrideFileOverrideDefaults) {
  const auto cfg = write_temp("prec.cfg", "alpha = 0.05\nkicks = 9\nT = 2\n");
  const auto r = run_cli("show --config " + cfg + " --alpha 0.07");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("alpha = 0.070000000000000007"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("kicks = 9\n"), std::string::npos);
  EXPECT_NE(r.out.find("T = 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("epsilon = 0.01"), std::string::npos);
}

TEST(Cli, ShowOutputReparses) {
  const auto first = run_cli("show --mode scan --scan-param T --scan-start 0.5 --scan-stop 1.5 --scan-steps 3");
  ASSERT_EQ(first.exit_code, 0);
  const auto path = write_temp("echo.cfg", first.out);
  const auto second = run_cli("show --config " + path);
  ASSERT_EQ(second.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, WritesOutputFile) {
  const std::string out = ::testing::TempDir() + "cli_out.csv";
  std::remove(out.c_str());
  const auto r = run_cli("run --mode analytic --kicks 4 --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(first_lines(ss.str(), 1), "k,P00,P01,P10,P11,leakage,concurrence,F_B1,F_B2,F_B3,F_B4\n");
}

TEST(Cli, RequiresSubcommand) {
  EXPECT_NE(run_cli("").exit_code, 0);
}

}  // namespace
