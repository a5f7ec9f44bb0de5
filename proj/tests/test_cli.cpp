#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "gegen/errors.hpp"
#include "report_io.hpp"

using namespace gegen;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "gegen_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  EXPECT_EQ(ec, std::errc());
  EXPECT_EQ(ptr, text.data() + text.size());
  return value;
}

}  // namespace

TEST(CliExitCodes, HelpAndUsage) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--help"}).code, 0);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--family", "laguerre", "--n", "1", "--t", "0"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--family", "jacobi", "--alpha", "1", "--n", "2", "--t", "0"}).code, 2);
  EXPECT_EQ(invoke({"eval", "--family", "jacobi", "--alpha", "x", "--beta", "0", "--n", "2",
                    "--t", "0"}).code,
            2);
}

TEST(CliEval, Examples) {
  auto r = invoke({"eval", "--family", "gengeg-orthonormal", "--lambda", "2", "--mu", "1", "--n",
                   "7", "--t", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  r = invoke({"eval", "--family", "jacobi", "--alpha", "2", "--beta", "1", "--n", "5", "--t", "1"});
  EXPECT_EQ(r.out, "21\n");
  r = invoke({"eval", "--family", "gengeg", "--lambda", "1", "--mu", "0.5", "--n", "1", "--t", "0.4"});
  EXPECT_EQ(r.out, "0.6\n");
  r = invoke({"eval", "--family", "gegenbauer", "--lambda", "0.5", "--n", "4", "--t", "1"});
  EXPECT_EQ(r.out, "1\n");
  r = invoke({"eval", "--family", "jacobi", "--alpha", "0.3", "--beta", "1.2", "--n", "10", "--t",
              "-0.45"});
  EXPECT_EQ(r.out, "-0.526908784947585\n");
}

TEST(CliEval, DomainAndMismatchErrors) {
  EXPECT_EQ(invoke({"eval", "--family", "jacobi", "--alpha", "-1", "--beta", "0", "--n", "2",
                    "--t", "0"}).code,
            2);
  EXPECT_EQ(invoke({"eval", "--family", "jacobi", "--alpha", "0", "--beta", "0", "--n", "2",
                    "--t", "1.5"}).code,
            2);
  const auto r = invoke({"eval", "--family", "gegenbauer", "--lambda", "1", "--mu", "1", "--n",
                         "2", "--t", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--mu"), std::string::npos);
  EXPECT_EQ(invoke({"eval", "--family", "gengeg", "--alpha", "1", "--lambda", "1", "--mu", "1",
                    "--n", "2", "--t", "0"}).code,
            2);
}

TEST(CliHypotheses, Lemma1AndTheorem1) {
  auto r = invoke({"verify", "lemma1", "--alpha", "0.4", "--beta", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("alpha > 1/2"), std::string::npos);
  r = invoke({"verify", "theorem1", "--lambda", "1", "--mu", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("mu > 0"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliQuadrature, GoldenCsvAndJson) {
  auto r = invoke({"quadrature", "--alpha", "0", "--beta", "0", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "node,weight\n"
            "-0.774596669241483,0.555555555555556\n"
            "0,0.888888888888889\n"
            "0.774596669241483,0.555555555555556\n");
  r = invoke({"quadrature", "--alpha", "0", "--beta", "0", "--m", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nodes"][0].get<double>(), 0.0);
  EXPECT_NEAR(j["weights"][0].get<double>(), 2.0, 1e-14);
}

TEST(CliTable, GridAndOutputFile) {
  const auto path = scratch("table.csv");
  const auto r = invoke({"table", "--family", "jacobi", "--alpha", "0", "--beta", "0", "--n", "1",
                         "--points", "3", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), "t,value\n-1,-1\n0,0\n1,1\n");
}

TEST(CliAsymptotics, JsonReportForLambdaDominant) {
  const auto path = scratch("report.json");
  const auto r = invoke({"asymptotics", "--lambda", "2", "--mu", "1", "--n-min", "100", "--n-max",
                         "2000", "--samples", "16", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(slurp(path));
  EXPECT_EQ(j["params"]["family"], "gengeg-orthonormal");
  EXPECT_EQ(j["target_exponent"].get<double>(), 2.0);
  EXPECT_NEAR(j["fitted_exponent"].get<double>(), 2.0, 0.05);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["records"].size(), 16u);
  for (const char* key : {"n", "sup_norm", "normalized_ratio", "argmax_t"}) {
    EXPECT_TRUE(j["records"][0].contains(key)) << key;
  }
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  ASSERT_GE(keys.size(), 8u);
  EXPECT_EQ((std::vector<std::string>(keys.begin(), keys.begin() + 8)),
            (std::vector<std::string>{"params", "target_exponent", "fitted_exponent", "ratio_min",
                                      "ratio_max", "tolerance_used", "verdict", "records"}));
}

TEST(CliVerify, FailVerdictExitsOne) {
  const auto r = invoke({"verify", "coefficients", "--lambda", "2", "--mu", "1", "--n-min", "100",
                         "--n-max", "10000", "--band-tol", "1.0001"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("fail"), std::string::npos);
  EXPECT_EQ(r.out.rfind("n,sup_norm,normalized_ratio,argmax_t\n", 0), 0u);
}

TEST(CliVerify, PassingSuites) {
  EXPECT_EQ(invoke({"verify", "coefficients", "--lambda", "2", "--mu", "1", "--band-tol", "2"}).code, 0);
  EXPECT_EQ(invoke({"verify", "lemma1", "--alpha", "2.5", "--beta", "0.3"}).code, 0);
  EXPECT_EQ(invoke({"verify", "jacobi-facts", "--alpha", "2", "--beta", "1", "--n-values",
                    "50,100,200,400"}).code,
            0);
  EXPECT_EQ(invoke({"verify", "jacobi-facts", "--alpha", "2", "--beta", "1", "--n-values",
                    "100,50"}).code,
            2);
}

TEST(CliOutput, WriteFailureExitsOne) {
  const auto r = invoke({"quadrature", "--alpha", "0", "--beta", "0", "--m", "2", "--out",
                         "/nonexistent-dir/out.csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliOutput, FormatFollowsExtension) {
  const auto json_path = scratch("coef.json");
  const auto csv_path = scratch("coef.txt");
  std::vector<std::string> base{"verify", "coefficients", "--lambda", "1", "--mu", "1",
                                "--n-min", "10", "--n-max", "1000", "--samples", "8"};
  auto with_out = [&](const fs::path& p) {
    auto args = base;
    args.push_back("--out");
    args.push_back(p.string());
    return args;
  };
  EXPECT_EQ(invoke(with_out(json_path)).code, 0);
  EXPECT_EQ(invoke(with_out(csv_path)).code, 0);
  EXPECT_EQ(slurp(json_path).front(), '{');
  EXPECT_EQ(slurp(csv_path).rfind("n,sup_norm", 0), 0u);
  auto explicit_csv = with_out(json_path);
  explicit_csv.push_back("--format");
  explicit_csv.push_back("csv");
  EXPECT_EQ(invoke(explicit_csv).code, 0);
  EXPECT_EQ(slurp(json_path).rfind("n,sup_norm", 0), 0u);
}

TEST(CliOutput, IdenticalInvocationsAreByteIdentical) {
  const auto a = scratch("det_a.json");
  const auto b = scratch("det_b.json");
  for (const auto& p : {a, b}) {
    ASSERT_EQ(invoke({"verify", "theorem1", "--lambda", "1.5", "--mu", "0.2", "--n-min", "100",
                      "--n-max", "400", "--samples", "8", "--out", p.string()}).code,
              0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(ReportIo, CsvRoundTripIsExact) {
  AsymptoticReport report(GegenParams(2, 1), "t");
  report.records = {{100, 2821.45278462525, 0.2821452784625250, 1.0},
                    {123, 1.0 / 3.0, std::nextafter(1.0, 2.0), -0.123456789012345678},
                    {7, 5e-310, 1e300, 0.0}};
  std::ostringstream out;
  cli::emit_report(report, cli::Format::csv, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,sup_norm,normalized_ratio,argmax_t");
  for (const auto& r : report.records) {
    ASSERT_TRUE(std::getline(in, line));
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    ASSERT_EQ(fields.size(), 4u);
    EXPECT_EQ(std::stoull(fields[0]), r.n);
    EXPECT_EQ(parse_double(fields[1]), r.sup_norm);
    EXPECT_EQ(parse_double(fields[2]), r.normalized_ratio);
    EXPECT_EQ(parse_double(fields[3]), r.argmax_t);
  }
}

TEST(ReportIo, JsonNanIsNullAndEmptyIsRejected) {
  AsymptoticReport report(JacobiParams(0.5, -0.5), "x");
  report.records = {{4, 1.5, 1.5, std::nan("")}};
  report.fitted_exponent = std::nan("");
  std::ostringstream out;
  cli::emit_report(report, cli::Format::json, out);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_TRUE(j["records"][0]["argmax_t"].is_null());
  EXPECT_TRUE(j["fitted_exponent"].is_null());
  EXPECT_EQ(j["params"]["family"], "jacobi");
  EXPECT_EQ(j["params"]["beta"].get<double>(), -0.5);

  AsymptoticReport empty(GegenParams(1, 1));
  std::ostringstream sink;
  EXPECT_THROW(cli::emit_report(empty, cli::Format::csv, sink), domain_error);
}

TEST(ReportIo, ShortestFormatting) {
  EXPECT_EQ(cli::format_shortest(0.1), "0.1");
  EXPECT_EQ(cli::format_shortest(2.0), "2");
  EXPECT_EQ(parse_double(cli::format_shortest(1.0 / 3.0)), 1.0 / 3.0);
}
