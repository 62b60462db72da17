#include "poslin/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace poslin;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyExample) {
  const CliResult r = run({"classify", "--alpha", "-33/100", "--beta", "-87/100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("label: V′\\V"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyJson) {
  const CliResult r = run({"classify", "--alpha", "-33/100", "--beta", "-87/100", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["params"]["alpha"], "-33/100");
  EXPECT_EQ(j["payload"]["label"], "V′\\V");
  EXPECT_EQ(j["payload"]["in_Vprime"], true);
}

TEST(Cli, LinearizeExample) {
  const CliResult r = run({"linearize", "--family", "gencheb", "--alpha", "1", "--beta", "0", "--m", "1", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k=1: 1/4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("k=3: 3/4"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("k=2:"), std::string::npos) << r.out;
}

TEST(Cli, ScanExample) {
  const CliResult r = run({"scan", "--check", "nonneg", "--alpha", "-1/2", "--beta", "0", "--max-degree", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation at (1,1,1) value -4/7"), std::string::npos) << r.out;
}

TEST(Cli, CsvJsonRoundTrip) {
  for (const char* family : {"jacobi", "jacobi-plus", "gencheb"}) {
    const std::vector<std::string> base = {"linearize", "--family", family, "--alpha", "-7/20",
                                           "--beta",    "-3/4",    "--m",  "3",       "--n", "5"};
    auto csv_args = base, json_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    json_args.insert(json_args.end(), {"--format", "json"});
    const CliResult csv = run(csv_args), json = run(json_args);
    ASSERT_EQ(csv.code, 0);
    ASSERT_EQ(json.code, 0);
    std::istringstream in(csv.out);
    const auto from_csv = read_coeffs_csv(in);
    const auto from_json = read_coeffs_json(json.out);
    EXPECT_EQ(from_csv, from_json);
    EXPECT_FALSE(from_csv.empty());
    Rational total = 0;
    for (const auto& e : from_csv) total += e.value;
    EXPECT_EQ(total, 1);
  }
}

TEST(Cli, LinearizeMethodsAgree) {
  auto values = [](const std::string& method) {
    const CliResult r = run({"linearize", "--alpha", "1/2", "--beta", "1/4", "--m", "3", "--n", "4", "--method", method,
                       "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    return read_coeffs_json(r.out);
  };
  const auto gasper = values("gasper");
  EXPECT_EQ(values("brute"), gasper);
  EXPECT_EQ(values("rahman"), gasper);
  EXPECT_EQ(values("rahman-special"), gasper);
}

TEST(Cli, MethodOutsideItsDomainIsRangeError) {
  EXPECT_EQ(run({"linearize", "--alpha", "0", "--beta", "1/2", "--m", "2", "--n", "2", "--method", "rahman"}).code, 2);
  EXPECT_EQ(run({"linearize", "--alpha", "1", "--beta", "0", "--m", "2", "--n", "2", "--method", "dougall"}).code, 2);
  EXPECT_EQ(
      run({"linearize", "--family", "gencheb", "--alpha", "1", "--beta", "0", "--m", "2", "--n", "2", "--method", "rahman"})
          .code,
      2);
}

TEST(Cli, CompareAllAgree) {
  const CliResult r = run({"compare", "--alpha", "1/2", "--beta", "1/2", "--max-degree", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 disagreements: all agree"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
  const CliResult j = run({"compare", "--alpha", "1", "--beta", "0", "--max-degree", "2", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(Json::parse(j.out)["verdict"], "all agree");
}

TEST(Cli, ScanModes) {
  EXPECT_EQ(run({"scan", "--check", "all", "--alpha", "-33/100", "--beta", "-87/100", "--max-degree", "5"}).code, 1);
  EXPECT_EQ(run({"scan", "--check", "odd", "--alpha", "-33/100", "--beta", "-87/100", "--max-degree", "5"}).code, 0);
  EXPECT_EQ(run({"scan", "--check", "strict", "--alpha", "2", "--beta", "1/2", "--max-degree", "5"}).code, 0);
  // exact zeros violate strict positivity
  EXPECT_EQ(run({"scan", "--check", "strict", "--alpha", "0", "--beta", "0", "--max-degree", "3"}).code, 1);
  EXPECT_EQ(run({"scan", "--check", "oscillation", "--alpha", "1", "--beta", "0", "--max-degree", "4"}).code, 0);
  const CliResult j = run({"scan", "--check", "all", "--alpha", "-33/100", "--beta", "-87/100", "--max-degree", "5", "--json"});
  const Json rec = Json::parse(j.out);
  EXPECT_EQ(rec["payload"]["witness"]["m"], 4);
  EXPECT_EQ(rec["verdict"], "fail");
}

TEST(Cli, VerifyProperties) {
  for (const char* prop : {"pq-inequality", "phi-alternation", "iota-zeros", "recursion-consistency", "nec-identities"}) {
    const CliResult r = run({"verify", "--property", prop, "--alpha", "-33/100", "--beta", "-87/100"});
    EXPECT_EQ(r.code, 0) << prop << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
  }
  const CliResult two = run({"verify", "--property", "iota-zeros", "--alpha", "-81/200", "--beta", "-181/200", "--m", "2", "--s", "0"});
  EXPECT_EQ(two.code, 1);
  EXPECT_NE(two.out.find("witness:"), std::string::npos);
  EXPECT_EQ(run({"verify", "--property", "phi-alternation", "--alpha", "1", "--beta", "0", "--m", "2"}).code, 2);
}

TEST(Cli, Witness) {
  const CliResult w = run({"witness", "--alpha", "-1/2", "--beta", "0", "--max-degree", "8"});
  EXPECT_EQ(w.code, 1);
  EXPECT_NE(w.out.find("g_T(3,3,2) = -8/21"), std::string::npos) << w.out;
  const CliResult none = run({"witness", "--alpha", "0", "--beta", "0", "--max-degree", "6"});
  EXPECT_EQ(none.code, 0);
  EXPECT_NE(none.out.find("none found"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify", "--alpha", "0.5", "--beta", "0"}).code, 2);
  EXPECT_EQ(run({"classify", "--alpha", "-1", "--beta", "0"}).code, 2);
  EXPECT_EQ(run({"classify", "--alpha", "1", "--beta", "0", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"scan", "--check", "bogus", "--alpha", "1", "--beta", "0", "--max-degree", "2"}).code, 2);
  EXPECT_EQ(run({"linearize", "--alpha", "1", "--beta", "0", "--m", "-1", "--n", "2"}).code, 2);
  const CliResult r = run({"classify", "--alpha", "1/0", "--beta", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed rational"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}
