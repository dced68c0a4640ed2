#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diskpoisson/cli.hpp"

namespace cli = diskpoisson::cli;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "diskpoisson");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, CatalogListsFamilies) {
  const auto r = run({"catalog"});
  ASSERT_EQ(r.code, cli::kAllHold);
  const auto listing = Json::parse(r.out);
  bool identity = false, quadratic = false;
  for (const auto& e : listing) {
    if (e["pattern"] == "identity") identity = e["exact_K"] == "1" && e["source"] == "0";
    if (e["pattern"] == "quadratic-source:c") quadratic = e["source"] == "4c";
  }
  EXPECT_TRUE(identity);
  EXPECT_TRUE(quadratic);
}

TEST(Cli, VerifyIdentityCoefficients) {
  const auto r = run({"verify", "--map", "identity", "--suite", "thm3"});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  const auto reports = Json::parse(r.out);
  ASSERT_FALSE(reports.empty());
  EXPECT_EQ(reports[0]["theorem_id"], "thm3-coefficient");
  EXPECT_TRUE(reports[0]["sharp"].get<bool>());
  EXPECT_EQ(reports[0]["inputs"]["n"], 1.0);
  EXPECT_EQ(reports[0]["resolution"]["boundary_nodes"], 2048);
  for (const auto& rep : reports) {
    for (const char* key : {"theorem_id", "lhs", "rhs", "margin", "holds", "resolution"}) EXPECT_TRUE(rep.contains(key));
  }
}

TEST(Cli, MeasurePerimeterOfScaledDisk) {
  const auto r = run({"measure", "--map", "scale:2", "--functional", "perimeter", "--r", "1"});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  EXPECT_NEAR(Json::parse(r.out)[0]["value"].get<double>(), 4.0 * std::numbers::pi, 1e-12);
}

TEST(Cli, MeasureRegularityNeedsNoMap) {
  const auto r = run({"measure", "--functional", "regularity", "--omega", "t^0.5"});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  const auto records = Json::parse(r.out);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_NEAR(records[0]["constant"].get<double>(), 2.0, 0.1);
}

TEST(Cli, SolveFromSpecs) {
  const auto r = run({"solve", "--psi", "a2=1", "--g", "const:1", "--z", "0.5,0", "--boundary-nodes", "256",
                      "--radial-nodes", "32", "--angular-nodes", "64"});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  // z^2 - (1 - |z|^2)/4 at z = 0.5.
  EXPECT_NEAR(Json::parse(r.out)[0]["f_re"].get<double>(), 0.25 - 0.1875, 1e-10);
}

TEST(Cli, CsvHasFixedColumns) {
  const auto r = run({"verify", "--map", "identity", "--suite", "isoperimetric", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  const auto header = r.out.substr(0, r.out.find('\n'));
  EXPECT_EQ(header,
            "theorem_id,map,lhs,rhs,margin,holds,sharp,tolerance,sharpness_tolerance,boundary_nodes,radial_nodes,"
            "angular_nodes,seed,inputs,labels,constants");
  EXPECT_NE(r.out.find("isoperimetric,identity,"), std::string::npos);
}

TEST(Cli, ConfigFileWithOverrides) {
  const auto config = temp_path("diskpoisson_cli_test.toml");
  {
    std::ofstream os(config);
    os << "map = [\"shear:0.5\"]\nsuite = \"thm4\"\nformat = \"csv\"\n";
  }
  const auto r = run({"verify", "--config", config.string(), "--format", "json"});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  const auto reports = Json::parse(r.out);
  EXPECT_EQ(reports[0]["map"], "shear:0.5");
  EXPECT_EQ(reports[0]["theorem_id"], "thm4-coefficient");
  std::filesystem::remove(config);
}

TEST(Cli, WritesOutputFile) {
  const auto path = temp_path("diskpoisson_cli_out.json");
  const auto r = run({"verify", "--map", "identity", "--suite", "lem22", "--out", path.string()});
  ASSERT_EQ(r.code, cli::kAllHold) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream is(path);
  EXPECT_EQ(Json::parse(is)[0]["theorem_id"], "lem22-derivative");
  std::filesystem::remove(path);
}

TEST(Cli, InputErrorsExitWithTwo) {
  EXPECT_EQ(run({"verify", "--map", "spiral:1"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--suite", "thm9"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--map", "identity", "--boundary-nodes", "100"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--map", "identity", "--out", "/nonexistent-dir/x.json", "--suite", "thm4"}).code,
            cli::kInputError);
  EXPECT_EQ(run({"measure", "--functional", "perimeter"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "--psi", "c1=2"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "--config", "/nonexistent-config.toml"}).code, cli::kInputError);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kAllHold);
  EXPECT_NE(r.out.find("--boundary-nodes"), std::string::npos);
}

TEST(Cli, FailingCheckExitsWithOne) {
  // identity attains the radial coefficient bound; with zero slack the last-bit
  // rounding of the quadrature for M leaves the margin slightly negative.
  const auto r = run({"verify", "--map", "identity", "--suite", "thm4", "--tolerance", "0"});
  ASSERT_EQ(r.code, cli::kCheckFailed) << r.err;
  const auto reports = Json::parse(r.out);
  EXPECT_FALSE(reports[0]["holds"].get<bool>());
  EXPECT_LT(reports[0]["margin"].get<double>(), 0.0);
  EXPECT_GT(reports[0]["margin"].get<double>(), -1e-14);
}

TEST(Cli, MakeMappingLabels) {
  cli::RunConfig config;
  config.boundary_nodes = 256;
  const auto solver = cli::make_mapping("solver:shear:0.5", config);
  EXPECT_TRUE(solver.solver_backed());
  EXPECT_NEAR(std::abs(solver.value(0.5) - 0.75), 0.0, 1e-12);
  EXPECT_FALSE(cli::make_mapping("shear:0.5", config).solver_backed());
  EXPECT_THROW(cli::make_mapping("solver:nope", config), std::invalid_argument);
}
