#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "test_support.hpp"

namespace {

using namespace rctest;

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded unless `with_stderr`.
Run cli(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(RANKCONS_CLI) + " " + args +
                          (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string example() { return data_path("example.txt"); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("rankcons_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, MeasureDefaults) {
  const auto r = cli("measure " + example());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gamma,lambda,kappa,ell,kappa_1,kappa_2,kappa_3,kappa_4\n1,1,17,4,5,7,4,1\n");
}

TEST(Cli, MeasureJsonAndTable) {
  auto r = cli("measure --format json " + example());
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kappa_total"], 17);
  r = cli("measure --format table --dedup " + data_path("example_duplicates.txt"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("kappa_hat   24\n"), std::string::npos);
}

TEST(Cli, MeasureDataset) {
  const auto r = cli("measure --dataset CLUSTERING_CE --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["kappa_total"], 19);
}

TEST(Cli, MeasureTopK) {
  const auto file = temp_file("abc.txt", "a b c\n");
  const auto r = cli("measure --format json --topk-zeta 10 --topk-beta 0.5 " + file.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out)["topk_kappa_1"].get<double>(), 0.875);
}

TEST(Cli, DumpMatrix) {
  const auto file = temp_file("ab.txt", "a b\n");
  const auto dump = std::filesystem::temp_directory_path() / "rankcons_cli_matrix.csv";
  ASSERT_EQ(cli("measure --dump-matrix " + dump.string() + " " + file.string()).code, 0);
  EXPECT_EQ(read_file(dump), "row,col,value\n1,1,1\n2,1,1\n2,2,1\n");
}

TEST(Cli, InvalidParams) {
  const auto r = cli("measure --gamma 0 " + example(), true);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("gamma must be in (0,1]"), std::string::npos);
  EXPECT_EQ(cli("measure --deviation median " + example()).code, 3);
  EXPECT_EQ(cli("measure --topk-zeta 3 " + example()).code, 3);
  EXPECT_EQ(cli("measure").code, 3);
  EXPECT_EQ(cli("measure --dataset clustering " + example()).code, 3);
  EXPECT_EQ(cli("measure --bogus " + example()).code, 3);
}

TEST(Cli, ParseErrors) {
  const auto bad = temp_file("dup.txt", "a b a\n");
  const auto r = cli("measure " + bad.string(), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "rankcons: duplicate item a at line 1\n");
  EXPECT_EQ(cli("measure /nonexistent/file.txt").code, 2);
}

TEST(Cli, Sweep) {
  auto r = cli("sweep --dataset clustering_ce --format table");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\t3.101\n"), std::string::npos);
  r = cli("sweep --dataset search_google --gamma-grid 1:1:0 --lambda-grid 1:1:0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gamma,lambda,kappa\n1,1,33\n");
  r = cli("sweep --gamma-grid 1:1:0 --lambda-grid 1:1:0 --per-p 1,2,3,4,5 " + example());
  EXPECT_EQ(r.out, "gamma,lambda,kappa,kappa_1,kappa_2,kappa_3,kappa_4,kappa_5\n"
                   "1,1,17,5,7,4,1,0\n");
  EXPECT_EQ(cli("sweep --gamma-grid 1:0.5 " + example()).code, 3);
  EXPECT_EQ(cli("sweep --gamma-grid 1:0:0.5 " + example()).code, 3);
  EXPECT_EQ(cli("sweep --per-p 0 " + example()).code, 3);
}

TEST(Cli, SweepIsDeterministic) {
  const std::string args = "sweep --dataset search_bing --per-p 1,2,3 --threads 3";
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, Baseline) {
  auto r = cli("baseline --dataset clustering --index tau --mode mean");
  ASSERT_EQ(r.code, 0);
  const auto last = r.out.substr(r.out.rfind("kendall-tau"));
  const double v = std::stod(last.substr(last.rfind(',') + 1));
  EXPECT_GE(v, -1.0);
  EXPECT_LE(v, 1.0);
  r = cli("baseline --dataset search_google --index tau", true);
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("rankings 0 and 1"), std::string::npos);
  const auto same = temp_file("same.txt", "a b c\na b c\n");
  r = cli("baseline --index footrule --mode sum " + same.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,0\n0,0\nfootrule,sum,0\n");
}

TEST(Cli, OracleCheck) {
  EXPECT_EQ(cli("oracle-check " + example()).code, 0);
  EXPECT_EQ(cli("oracle-check --gamma 0.8 --lambda 0.7 " + example()).code, 0);
  EXPECT_EQ(cli("oracle-check --dataset search_google").code, 6);
}

TEST(Cli, Experiment) {
  auto r = cli("experiment search");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("kappa(1,1) = 33\nkappa_1 at gamma=1 = 7\n"), std::string::npos);
  EXPECT_NE(r.out.find("kappa(1,1) = 23\nkappa_1 at gamma=1 = 8\n"), std::string::npos);
  r = cli("experiment clustering");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("== clustering-ga =="), std::string::npos);
  EXPECT_NE(r.out.find("== clustering-ce =="), std::string::npos);
  EXPECT_NE(r.out.find("best variant: stddev"), std::string::npos);
  EXPECT_EQ(cli("experiment weather").code, 3);
}

TEST(Cli, NoPartialOutputOnError) {
  const auto bad = temp_file("ties.txt", "a {b c} d\na b c d\n");
  const auto r = cli("baseline --index rho " + bad.string());
  EXPECT_EQ(r.code, 4);
  EXPECT_TRUE(r.out.empty());
}

}  // namespace
