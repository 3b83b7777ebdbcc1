#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace cli = ctoda::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  return nlohmann::json::parse(r.out);
}

std::vector<std::string> kappas(const nlohmann::json& j) {
  std::vector<std::string> out;
  for (const auto& v : j["values"]) out.push_back(v["kappa"]);
  return out;
}

}  // namespace

TEST(Cli, KappaExamples) {
  EXPECT_EQ(kappas(run_json({"kappa", "--nu", "2", "--genus", "0", "--max-order", "3"})),
            (std::vector<std::string>{"2", "36", "1728"}));
  EXPECT_EQ(kappas(run_json({"kappa", "--nu", "2", "--genus", "1", "--max-order", "1"})), (std::vector<std::string>{"1"}));
  const auto j = run_json({"kappa", "--nu", "4", "--genus", "2", "--max-order", "1"});
  EXPECT_EQ(kappas(j), (std::vector<std::string>{"21"}));
  EXPECT_EQ(j["schema"], 1);
  ASSERT_FALSE(j["resonances"].empty());
  EXPECT_EQ(j["resonances"][0]["source"], "table");
  EXPECT_EQ(j["resonances"][0]["value"], "21");
}

TEST(Cli, TableAndCsvFormats) {
  const auto table = run({"kappa", "--nu", "2", "--genus", "0", "--max-order", "3"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("1728"), std::string::npos);
  const auto csv = run({"kappa", "--nu", "2", "--genus", "0", "--max-order", "2", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,kappa,source");
  std::istringstream lines(table.out);
  for (std::string line; std::getline(lines, line);) EXPECT_TRUE(line.empty() || line.back() != ' ') << line;
}

TEST(Cli, ClosedFormGenusOne) {
  const auto j = run_json({"closed-form", "--target", "e", "--genus", "1", "--nu", "3"});
  EXPECT_EQ(j["c_log_nu_term"], "-1/12");
  EXPECT_EQ(j["d_log_z_term"], "0");
  EXPECT_EQ(j["fit"], "ok");
  const auto z = run_json({"closed-form", "--target", "z", "--genus", "1", "--nu", "2"});
  EXPECT_EQ(z["rational_function"]["denominator"].size(), 5u);
  EXPECT_EQ(z["rational_function"]["numerator"],
            nlohmann::json::array({"0", "2/3", "-4/3", "2/3"}));
}

TEST(Cli, ZgAndEgSeries) {
  const auto z = run_json({"zg", "--nu", "2", "--genus", "1", "--max-order", "3"});
  EXPECT_EQ(z["coefficients"], nlohmann::json::array({"0", "0", "96", "10368"}));
  EXPECT_EQ(z["two_leg_counts"][2], "192");
  const auto e = run_json({"eg", "--nu", "2", "--genus", "1", "--max-order", "3"});
  EXPECT_EQ(e["coefficients"], nlohmann::json::array({"0", "1", "30", "1056"}));
}

TEST(Cli, OracleSchemaAndBudget) {
  const auto j = run_json({"oracle", "--nu", "2", "--vertices", "1"});
  EXPECT_EQ(j["total"], "3");
  EXPECT_EQ(j["disconnected"], "0");
  EXPECT_EQ(j["by_genus"]["0"], "2");
  EXPECT_EQ(j["by_genus"]["1"], "1");
  for (const char* key : {"nu", "vertices", "legs", "total", "disconnected", "by_genus"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto refused = run({"oracle", "--nu", "2", "--vertices", "5"});
  EXPECT_EQ(refused.code, cli::kBudget);
  EXPECT_NE(refused.err.find("654729075"), std::string::npos);
}

TEST(Cli, TwoTime) {
  const auto j = run_json({"two-time", "--nu", "2", "--nu2", "3", "--max-order", "2"});
  bool found = false;
  for (const auto& c : j["coefficients"])
    if (c["s1"] == 1 && c["s2"] == 1) {
      EXPECT_EQ(c["value"], "3600");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, CrosscheckPasses) {
  const auto r = run({"crosscheck", "--nu", "2", "--genus", "2", "--order", "8"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const auto j = run_json({"crosscheck", "--nu", "3", "--genus", "1", "--order", "5"});
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"kappa", "--nu", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"kappa", "--genus", "-1"}).code, cli::kUsage);
  EXPECT_EQ(run({"kappa", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"oracle", "--legs", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"closed-form", "--target", "q"}).code, cli::kUsage);
  EXPECT_EQ(run({"nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const auto help = run({"oracle", "--help"});
  EXPECT_EQ(help.code, cli::kOk);
  const auto first = help.out.find("--vertices");
  ASSERT_NE(first, std::string::npos);
  EXPECT_EQ(help.out.find("--vertices", first + 1), std::string::npos);
}

TEST(Cli, UnresolvedConstantExitsTwo) {
  const auto r = run({"kappa", "--nu", "2", "--genus", "4", "--max-order", "6"});
  EXPECT_EQ(r.code, cli::kConsistencyFailure);
  EXPECT_NE(r.err.find("genus"), std::string::npos) << r.err;
}

TEST(Cli, DeterministicAcrossThreads) {
  const auto a = run({"oracle", "--nu", "2", "--vertices", "3", "--format", "json", "--threads", "1"});
  const auto b = run({"oracle", "--nu", "2", "--vertices", "3", "--format", "json", "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"eg", "--nu", "3", "--genus", "2"}).out, run({"eg", "--nu", "3", "--genus", "2"}).out);
}

TEST(Cli, WritesOutputFile) {
  const std::string path = ::testing::TempDir() + "ctoda_cli_out.json";
  const auto r = run({"kappa", "--nu", "2", "--max-order", "2", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["values"][1]["kappa"], "36");
}
