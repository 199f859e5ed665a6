#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oscillent_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = oscillent::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> column(const std::string& csv, std::size_t index) {
  std::vector<double> values;
  const auto rows = lines(csv);
  for (std::size_t r = 2; r < rows.size(); ++r) {
    std::istringstream cells(rows[r]);
    std::string cell;
    for (std::size_t c = 0; c <= index; ++c) std::getline(cells, cell, ',');
    values.push_back(std::strtod(cell.c_str(), nullptr));
  }
  return values;
}

double json_number(const std::string& json, const std::string& key) {
  const auto at = json.find("\"" + key + "\":");
  if (at == std::string::npos) return NAN;
  return std::strtod(json.c_str() + at + key.size() + 3, nullptr);
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("oscillent_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, PurityOfFirstExcitedCenterOfMassStateIsOneHalf) {
  const auto r =
      invoke({"purity", "--g", "1", "--mu1", "0.5", "--state", "number:0,1", "--method", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("{\"purity\":0.5,", 0), 0u) << r.out;
}

TEST(Cli, MethodsAgreeOnOneState) {
  std::vector<double> values;
  for (const char* method : {"exact", "fock", "oracle"}) {
    const auto r = invoke({"purity", "--g", "2", "--mu1", "0.4", "--state", "number:1,0",
                           "--method", method});
    ASSERT_EQ(r.code, 0) << method << ": " << r.err;
    values.push_back(json_number(r.out, "purity"));
  }
  EXPECT_NEAR(values[1], values[0], 1e-8);
  EXPECT_NEAR(values[2], values[0], 1e-6);
}

TEST(Cli, MassSweepIsSymmetric) {
  const auto r = invoke({"sweep", "--param", "mu1", "--range", "0.01:0.99:99", "--g", "5",
                         "--state", "number:1,1", "--method", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0].rfind("# params: {", 0), 0u);
  EXPECT_EQ(rows[1], "mu1,purity");
  const auto mu = column(r.out, 0);
  const auto purity = column(r.out, 1);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    EXPECT_NEAR(mu[i] + mu[mu.size() - 1 - i], 1.0, 1e-12);
    EXPECT_NEAR(purity[i], purity[purity.size() - 1 - i], 1e-10) << "mu1 = " << mu[i];
  }
}

TEST(Cli, ThetaSweepStartsAtTheNumberState) {
  const auto r = invoke({"sweep", "--param", "theta", "--range", "0:1.5707963267948966:3", "--g",
                         "1", "--mu1", "0.5", "--state", "theta:0,1;1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto purity = column(r.out, 1);
  ASSERT_EQ(purity.size(), 3u);
  EXPECT_NEAR(purity[0], 0.5, 1e-12);
  EXPECT_NEAR(purity[2], 0.5, 1e-12);
}

TEST(Cli, UnboundSweepDecreasesWithTime) {
  const auto r = invoke({"sweep", "--param", "tau", "--range", "0:8:5", "--c", "2", "--mu1", "0.3",
                         "--state", "unbound:0", "--method", "analytic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto purity = column(r.out, 1);
  for (std::size_t i = 1; i < purity.size(); ++i) EXPECT_LT(purity[i], purity[i - 1]);
}

TEST(Cli, Figure3HasOneColumnPerFrequencyRatio) {
  const auto r = invoke({"figure", "fig3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows[1], "mu1,g1,g10,g100,g1000");
  EXPECT_EQ(rows.size(), 2u + 99u);
}

TEST(Cli, Figure4ConventionsSwapRatio) {
  const auto direct = invoke({"figure", "fig4", "--samples", "9"});
  const auto inverse =
      invoke({"figure", "fig4", "--samples", "9", "--c-convention", "gamma/Gamma"});
  ASSERT_EQ(direct.code, 0) << direct.err;
  ASSERT_EQ(inverse.code, 0) << inverse.err;
  EXPECT_EQ(lines(direct.out)[1], "mu1,c1,c3,c10,c30");
  // c = 1 reads the same in both conventions; c = 3 does not.
  EXPECT_EQ(column(direct.out, 1), column(inverse.out, 1));
  EXPECT_NE(column(direct.out, 2), column(inverse.out, 2));
}

TEST(Cli, Figure7CoversFourCasesFourBasesSixTruncations) {
  const auto r = invoke({"figure", "fig7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  EXPECT_EQ(rows[1], "g,mu1,gamma1,gamma2,jmax,kmax,purity,abs_error");
  EXPECT_EQ(rows.size(), 2u + 96u);
}

TEST(Cli, Figure1WritesOneFilePerPanel) {
  const auto dir = scratch_dir("fig1");
  const auto r = invoke({"figure", "fig1", "--grid-points", "32", "--output-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 4u);
  std::ifstream panel(dir / "fig1_g1_mu1_0p5.csv");
  std::string header;
  std::string columns;
  std::getline(panel, header);
  std::getline(panel, columns);
  EXPECT_EQ(header.rfind("# params: {", 0), 0u);
  EXPECT_EQ(columns, "x1,x2,density");

  const auto b = invoke({"figure", "fig2", "--grid-points", "32", "--format", "binary",
                         "--output-dir", dir.string()});
  ASSERT_EQ(b.code, 0) << b.err;
  std::ifstream binary(dir / "fig2_g5_mu1_0p1.bin", std::ios::binary);
  std::getline(binary, header);
  EXPECT_EQ(header.rfind("{\"n\":32,", 0), 0u) << header;
  const auto data_bytes = std::filesystem::file_size(dir / "fig2_g5_mu1_0p1.bin") - header.size() - 1;
  EXPECT_EQ(data_bytes, 32u * 32u * sizeof(double));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"purity", "--g", "5", "--mu1", "0.3", "--state", "number:9,0"}).code, 3);
  EXPECT_EQ(invoke({"no-such-command"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"purity", "--g", "1", "--mu1", "1.5", "--state", "number:0,0"}).code, 1);
  EXPECT_EQ(invoke({"purity", "--g", "1", "--mu1", "0.5", "--state", "number:1,1", "--method",
                    "analytic"})
                .code,
            1);
  EXPECT_EQ(invoke({"sweep", "--param", "tau", "--range", "0:1:2", "--g", "1", "--mu1", "0.5",
                    "--state", "number:0,0"})
                .code,
            1);
  // An odd-parity state has no weight on the single-state truncated basis.
  EXPECT_EQ(invoke({"purity", "--g", "1", "--mu1", "0.5", "--state", "number:0,1", "--method",
                    "fock", "--jmax", "0", "--kmax", "0"})
                .code,
            2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, OracleCompareFailsBelowAttainableTolerance) {
  const auto ok = invoke({"oracle-compare", "--points", "128"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(lines(ok.out)[1], "case,method,purity,oracle_purity,residual,norm_defect");
  EXPECT_EQ(invoke({"oracle-compare", "--points", "128", "--tolerance", "1e-300"}).code, 2);
}

TEST(Cli, ConfigSuppliesFlagsAndCommandLineWins) {
  const auto dir = scratch_dir("config");
  const auto path = dir / "run.json";
  std::ofstream(path) << R"({"g": 1, "mu1": 0.3, "state": "number:0,1", "method": "exact"})";
  const auto from_file = invoke({"purity", "--config", path.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_NEAR(json_number(from_file.out, "purity"), 1 - 2 * 0.3 + 2 * 0.09, 1e-14);
  const auto overridden = invoke({"purity", "--config", path.string(), "--mu1", "0.5"});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  EXPECT_EQ(json_number(overridden.out, "purity"), 0.5);
  EXPECT_EQ(invoke({"purity", "--config", (dir / "missing.json").string()}).code, 1);
}

TEST(Cli, OutputFileMatchesStdout) {
  const auto dir = scratch_dir("output");
  const std::vector<std::string> base{"figure", "fig5", "--samples", "7"};
  const auto to_stdout = invoke(base);
  auto with_file = base;
  with_file.insert(with_file.end(), {"-o", (dir / "fig5.csv").string()});
  ASSERT_EQ(invoke(with_file).code, 0);
  std::ifstream file(dir / "fig5.csv");
  std::stringstream content;
  content << file.rdbuf();
  EXPECT_EQ(content.str(), to_stdout.out);
}

TEST(Cli, OutputIsIndependentOfThreadCount) {
  const std::vector<std::string> args{"figure", "fig6", "--samples", "33"};
  ::setenv("OSCILLENT_THREADS", "1", 1);
  const auto serial = invoke(args);
  ::setenv("OSCILLENT_THREADS", "4", 1);
  const auto parallel = invoke(args);
  ::unsetenv("OSCILLENT_THREADS");
  ASSERT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(Cli, CovarianceRecord) {
  const auto r = invoke({"covariance", "--g", "5", "--mu1", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const double purity = json_number(r.out, "purity");
  EXPECT_NEAR(std::acosh(1.0 / purity), json_number(r.out, "r"), 1e-12);
  EXPECT_NE(r.out.find("\"Vprime\":[["), std::string::npos);
}

TEST(Cli, SelftestSingleCriterion) {
  const auto r = invoke({"selftest", "--criterion", "6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u) << r.out;
}

}  // namespace
