#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chebms/serialize.hpp"
#include "cli.hpp"

using namespace chebms;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const Result r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, AnalyzePoly) {
  const Json linear = run_json({"analyze-poly", "--coeffs", "0,1", "--k-max", "50"});
  EXPECT_EQ(linear.at("status"), "RejectedWithWitness");
  EXPECT_EQ(linear.at("witness").at("n"), 1);
  EXPECT_EQ(run_json({"analyze-poly", "--coeffs", "1", "--k-max", "10"}).at("status"), "PassedNecessaryConditions");
  EXPECT_EQ(run_json({"analyze-poly", "--coeffs", "0,0,1"}).at("status"), "PassedNecessaryConditions");
}

TEST(Cli, AnalyzeGeometric) {
  const Json half = run_json({"analyze-geometric", "--ratio", "1/2"});
  EXPECT_EQ(half.at("status"), "RejectedNonReal");
  EXPECT_EQ(half.at("witness").at("delta"), "-243/16384");
  EXPECT_EQ(run_json({"analyze-geometric", "--ratio", "-1"}).at("status"), "KnownMultiplierSequence");
  EXPECT_EQ(run_json({"analyze-geometric", "--ratio", "0"}).at("status"), "KnownMultiplierSequence");
}

TEST(Cli, QTable) {
  const Json linear = run_json({"q-table", "--spec", "poly:0,1", "--k-max", "3"});
  const Json& rows = linear.at("rows");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1].at("q2k"), "-1/2");
  EXPECT_EQ(rows[2].at("q2k"), "-1/48");
  EXPECT_TRUE(rows[1].at("pair_with_next").get<bool>());
  EXPECT_FALSE(rows[0].at("pair_with_next").get<bool>());

  const Json identity = run_json({"q-table", "--spec", "poly:1", "--k-max", "3"});
  EXPECT_EQ(identity.at("coefficients"), Json::parse(R"(["1","0","0","0","0","0","0"])"));

  const Json square = run_json({"q-table", "--spec", "poly:0,0,1", "--k-max", "3"});
  EXPECT_EQ(square.at("rows")[2].at("q2k"), "0");
  EXPECT_EQ(square.at("rows")[3].at("q2k"), "0");

  const Result csv = run({"q-table", "--spec", "poly:0,1", "--k-max", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "k,q2k,sign,pair_with_next\n0,0,0,0\n1,-1/2,-1,1\n2,-1/48,-1,0\n");
}

TEST(Cli, IdentitiesVerify) {
  const Result r = run({"identities-verify"});
  EXPECT_EQ(r.code, cli::kExitOk);
  const Json j = Json::parse(r.out);
  for (const auto& [label, entry] : j.items()) EXPECT_TRUE(entry.at("pass").get<bool>()) << label;
  EXPECT_TRUE(j.contains("A_three_way"));
}

TEST(Cli, IdentitiesVerifyExtendedRanges) {
  EXPECT_EQ(run({"identities-verify", "--n-max", "11", "--k-max", "25", "--format", "text"}).code, cli::kExitOk);
}

TEST(Cli, IdentitiesVerifyCorruptedTableExitsOne) {
  WorpitzkyTable table(20);
  table.overwrite(2, 7, table.at(2, 7) - 1);
  std::ostringstream out;
  EXPECT_EQ(cli::identities_verify(IdentityRanges{}, table, cli::Format::Json, out), cli::kExitIdentityFailure);
  const Json j = Json::parse(out.str());
  EXPECT_FALSE(j.at("worpitzky_recurrences").at("pass").get<bool>());
}

TEST(Cli, Falsify) {
  const Json two = run_json({"falsify", "--spec", "geom:2", "--degree-max", "4", "--seed", "1", "--trials", "1000"});
  EXPECT_TRUE(two.at("found").get<bool>());
  EXPECT_GT(two.at("counterexample").at("image_real_root_deficit").get<int>(), 0);
  EXPECT_FALSE(run_json({"falsify", "--spec", "geom:-1", "--trials", "200"}).at("found").get<bool>());
  EXPECT_FALSE(run_json({"falsify", "--spec", "poly:1", "--trials", "200"}).at("found").get<bool>());
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"falsify", "--spec", "geom:3/2", "--seed", "9", "--trials", "300"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> q{"q-table", "--spec", "explicit:1,2,3,4,5,6,7", "--k-max", "3"};
  EXPECT_EQ(run(q).out, run(q).out);
}

TEST(Cli, NumericFieldsRoundTrip) {
  const Json j = run_json({"q-table", "--spec", "geom:-5/3", "--k-max", "6"});
  for (const auto& c : j.at("coefficients")) {
    const BigRational q = rational_from_json(c);
    EXPECT_EQ(q.to_string(), c.get<std::string>());
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"analyze-poly", "--coeffs", "0,x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"analyze-geometric", "--ratio", "1/0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"q-table", "--spec", "bogus:1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"q-table", "--spec", "explicit:1,2", "--k-max", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"analyze-poly", "--coeffs", "1", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, OutFileAndFormats) {
  const std::string path = ::testing::TempDir() + "chebms_cli_out.txt";
  EXPECT_EQ(run({"analyze-poly", "--coeffs", "0,1", "--format", "text", "--out", path}).code, 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_NE(buf.str().find("status: RejectedWithWitness"), std::string::npos);
  std::remove(path.c_str());
  const Result csv = run({"analyze-geometric", "--ratio", "2", "--format", "csv"});
  EXPECT_NE(csv.out.find("delta,\"-972\""), std::string::npos);
}
