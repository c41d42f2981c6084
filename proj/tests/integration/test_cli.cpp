// End-to-end tests of the dicke3 command line, driven in-process.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dicke3/cli/app.hpp"
#include "dicke3/cli/config.hpp"
#include "dicke3/cli/figures.hpp"
#include "dicke3/cli/table.hpp"
#include "dicke3/errors.hpp"

namespace fs = std::filesystem;
using namespace dicke3::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("dicke3_cli_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Angle, ExactLiterals) {
  const double pi = std::numbers::pi;
  EXPECT_EQ(parse_angle("pi/3"), pi / 3);
  EXPECT_EQ(parse_angle("pi/4"), pi / 4);
  EXPECT_EQ(parse_angle("pi/6"), pi / 6);
  EXPECT_EQ(parse_angle("pi/2"), pi / 2);
  EXPECT_EQ(parse_angle("pi"), pi);
  EXPECT_EQ(parse_angle("2pi/3"), 2 * pi / 3);
  EXPECT_EQ(parse_angle("-pi/4"), -pi / 4);
  EXPECT_EQ(parse_angle("0.5"), 0.5);
  EXPECT_THROW(parse_angle("pi/0"), dicke3::ValidationError);
  EXPECT_THROW(parse_angle("tau"), dicke3::ValidationError);
  EXPECT_THROW(parse_angle("1.0x"), dicke3::ValidationError);
}

TEST(Parsing, NumbersAndLists) {
  EXPECT_EQ(parse_number("1e-3", "G"), 1e-3);
  EXPECT_THROW(parse_number("", "G"), dicke3::ValidationError);
  EXPECT_THROW(parse_number("nan", "G"), dicke3::ValidationError);
  EXPECT_EQ(parse_int_list("2,4,8", "N"), (std::vector<long long>{2, 4, 8}));
  EXPECT_THROW(parse_int_list("2,,8", "N"), dicke3::ValidationError);
  EXPECT_THROW(parse_int_list("2,x", "N"), dicke3::ValidationError);
}

TEST(Config, IniRoundTrip) {
  RunConfig cfg;
  cfg.subcommand = "figure";
  cfg.target = "fig6";
  cfg.gauge = "unified";
  cfg.eta = 0.7;
  cfg.G = 0.1 + 0.2;  // not exactly representable in short decimal
  cfg.N = 12;
  cfg.phi = "pi/3";
  cfg.g_axis.min = 0.0;
  cfg.g_axis.max = 1.25;
  cfg.g_axis.count = 51;
  cfg.atom_counts = {2, 4};
  cfg.workers = 3;
  cfg.seed = 99;
  std::stringstream ss;
  write_config(ss, cfg);
  EXPECT_EQ(read_config(ss), cfg);
}

TEST(Config, UnknownKeyRejected) {
  std::stringstream ss("[model]\nG = 0.5\ncolour = red\n");
  EXPECT_THROW(read_config(ss), dicke3::ValidationError);
}

TEST(Config, EnvironmentOverridesResourceLimits) {
  ::setenv("DICKE3_ED_MAX_DIM", "1234", 1);
  ::setenv("DICKE3_WORKERS", "not-a-number", 1);
  RunConfig cfg;
  apply_environment(cfg);
  ::unsetenv("DICKE3_ED_MAX_DIM");
  ::unsetenv("DICKE3_WORKERS");
  EXPECT_EQ(cfg.max_dimension, 1234u);
  EXPECT_EQ(cfg.workers, 0u);
}

TEST(Table, CsvFormatting) {
  Table t;
  t.columns = {"name", "value", "count"};
  t.add({std::string("a,b"), 0.1, 3LL});
  t.add({std::string("c"), Cell{}, 4LL});
  std::ostringstream out;
  write_csv(out, t);
  EXPECT_EQ(out.str(), "name,value,count\n\"a,b\",0.10000000000000001,3\nc,,4\n");
  EXPECT_THROW(t.add({1.0}), std::exception);
}

TEST(Cli, PointResonantSuperradiant) {
  const CliRun r = run({"point", "--gauge", "unified", "--eta", "1", "--g", "1", "--phi", "pi/3", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["phase"], "SP");
  EXPECT_NEAR(j["result"]["n_p"].get<double>(), 1.875, 1e-14);
  EXPECT_NEAR(j["result"]["energy"].get<double>(), -2.125, 1e-14);
  EXPECT_NEAR(j["G_c"].get<double>(), 0.5, 1e-15);
}

TEST(Cli, PointNormalPhaseSummary) {
  const CliRun r = run({"point", "--g", "0.3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("phase           NP"), std::string::npos);
  EXPECT_NE(r.out.find("energy          -1"), std::string::npos);
}

TEST(Cli, NonHermitianPointReportsUnstableExtremum) {
  const CliRun r = run({"point", "--gauge", "nh-unified", "--g", "0.4", "--phi", "pi/3", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["phase"], "NP");
  EXPECT_EQ(j["result"]["unstable"]["phase"], "UnstableSP");
  EXPECT_NEAR(j["result"]["unstable"]["n_p"].get<double>(), 0.46125, 1e-12);
}

TEST(Cli, ValidationErrorsNameTheFlag) {
  CliRun r = run({"point", "--g", "-0.1"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("--g"), std::string::npos);
  r = run({"point", "--n", "0"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("--n"), std::string::npos);
  r = run({"point", "--gauge", "velocity"});
  EXPECT_EQ(r.code, kExitValidation);
  r = run({"point", "--phi", "banana"});
  EXPECT_EQ(r.code, kExitValidation);
  r = run({});
  EXPECT_EQ(r.code, kExitValidation);
}

TEST(Cli, UnknownFigureListsValidIds) {
  const CliRun r = run({"figure", "fig11"});
  EXPECT_EQ(r.code, kExitValidation);
  for (const auto& id : figure_ids()) EXPECT_NE(r.err.find(id), std::string::npos) << id;
}

TEST(Cli, FigureBudgetRefusedBeforeWork) {
  TempDir dir;
  const CliRun r = run({"figure", "fig4", "--out", dir.str(), "--cell-budget", "1000"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_TRUE(fs::is_empty(dir.path()));
}

TEST(Cli, FigureWritesPanelsAndSidecar) {
  TempDir dir;
  const CliRun r = run({"figure", "fig2", "--out", dir.str()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  int csvs = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) csvs += e.path().extension() == ".csv";
  EXPECT_EQ(csvs, 9);
  const auto side = nlohmann::json::parse(slurp(dir.path() / "fig2.json"));
  EXPECT_EQ(side["figure"], "fig2");
  EXPECT_TRUE(side.contains("generated_at"));
  EXPECT_TRUE(side.contains("config"));
  const std::string body = slurp(dir.path() / "fig2_b1.csv");
  EXPECT_EQ(body.substr(0, body.find('\n')), "eta,G,eps_minus,phase");
}

TEST(Cli, FigureAxisOverride) {
  TempDir dir;
  const CliRun r = run({"figure", "fig3", "--out", dir.str(), "--g-min", "0", "--g-max", "1", "--g-count", "11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string body = slurp(dir.path() / "fig3_a1.csv");
  EXPECT_EQ(std::count(body.begin(), body.end(), '\n'), 12);
}

TEST(Cli, FigureJsonFormat) {
  TempDir dir;
  const CliRun r = run({"figure", "fig7", "--out", dir.str(), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir.path() / "fig7_a1.json"));
  EXPECT_TRUE(nlohmann::json::accept(slurp(dir.path() / "fig7_a1.json")));
}

TEST(Cli, ConfigRoundTripThroughFiles) {
  TempDir dir;
  const std::string c1 = (dir.path() / "c1.ini").string();
  const std::string c2 = (dir.path() / "c2.ini").string();
  CliRun r = run({"--write-config", c1, "point", "--gauge", "dipole", "--eta", "1.5", "--g", "0.9", "--n", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CliRun replay = run({"--config", c1, "--write-config", c2});
  ASSERT_EQ(replay.code, kExitOk) << replay.err;
  EXPECT_EQ(slurp(c1), slurp(c2));
  EXPECT_EQ(replay.out, r.out);
  // flags win over the file
  const CliRun over = run({"--config", c1, "point", "--g", "0.2"});
  EXPECT_NE(over.out.find("phase           NP"), std::string::npos);
}

TEST(Cli, EnvironmentBudgetApplies) {
  TempDir dir;
  ::setenv("DICKE3_CELL_BUDGET", "10", 1);
  const CliRun r = run({"figure", "fig2", "--out", dir.str()});
  ::unsetenv("DICKE3_CELL_BUDGET");
  EXPECT_EQ(r.code, kExitBudget);
  // an explicit flag still wins
  ::setenv("DICKE3_CELL_BUDGET", "10", 1);
  const CliRun flag = run({"figure", "fig2", "--out", dir.str(), "--cell-budget", "100000"});
  ::unsetenv("DICKE3_CELL_BUDGET");
  EXPECT_EQ(flag.code, kExitOk) << flag.err;
}

TEST(Cli, EdTableAndFailures) {
  TempDir dir;
  CliRun r = run({"ed", "--g", "1", "--n", "2,4", "--out", dir.str()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir.path() / "ed_coulomb.csv"));
  EXPECT_EQ(slurp(dir.path() / "ed_coulomb.csv"), r.out);

  r = run({"ed", "--g", "1", "--n", "4096", "--out", dir.str()});
  EXPECT_EQ(r.code, kExitEdFailed);

  r = run({"ed", "--g", "1", "--n", "2,4096", "--out", dir.str()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);

  r = run({"ed", "--gauge", "nh-unified", "--n", "2", "--out", dir.str()});
  EXPECT_EQ(r.code, kExitValidation);
}

TEST(Cli, VerifyScopes) {
  CliRun r = run({"verify", "model", "--samples", "50"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run({"verify", "nonsense"});
  EXPECT_EQ(r.code, kExitValidation);
}
