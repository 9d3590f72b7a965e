#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "scrollsmith/cli.hpp"

using namespace scrollsmith;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyEchoesTheCanonicalForm) {
  const auto r = run({"classify", "--d", "1,1,1,2,0", "--b", "-1,-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("canonical: (2,1,1,1;-2,-1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("transformation:"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: smooth"), std::string::npos);
  EXPECT_NE(r.out.find("case: 2c"), std::string::npos);
  EXPECT_NE(r.out.find("chi: -4"), std::string::npos);
  EXPECT_NE(r.out.find("rationality: rational"), std::string::npos);
}

TEST(Cli, ClassifySingularTuple) {
  const auto r = run({"classify", "--d", "1,0,0,0", "--b", "-1,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: singular"), std::string::npos);
  EXPECT_NE(r.out.find("rationality: n/a"), std::string::npos);
}

TEST(Cli, ClassifyJson) {
  const auto r = run({"classify", "--d", "4,3,2,1", "--b", "-4,-3", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("smooth"), true);
  EXPECT_EQ(j.at("case"), "3h");
  EXPECT_EQ(j.at("chi"), -4);
  EXPECT_EQ(j.at("standard"), false);
  EXPECT_EQ(j.at("rational"), true);
}

TEST(Cli, Strict3jFlag) {
  const auto loose = run({"classify", "--d", "3,2,2,1", "--b", "-3,-1"});
  const auto strict = run({"classify", "--d", "3,2,2,1", "--b", "-3,-1", "--strict-3j"});
  EXPECT_NE(loose.out.find("case: 3j"), std::string::npos);
  EXPECT_NE(strict.out.find("verdict: singular"), std::string::npos);
}

TEST(Cli, Euler) {
  const auto r = run({"euler", "--d", "1,1,1,1,1", "--b", "-2,-1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-4\n");
  EXPECT_NE(r.err.find("(0,0,0,0;0,1)"), std::string::npos) << r.err;
}

TEST(Cli, EnumerateCsv) {
  const auto r = run({"enumerate", "--chi", "-4", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "d1,d2,d3,d4,b1,b2,case,chi,standard,rational\n"
            "0,0,0,0,0,1,1,-4,true,true\n"
            "2,1,1,1,-2,-1,2c,-4,true,true\n"
            "4,3,2,1,-4,-3,3h,-4,false,true\n");
  EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST(Cli, EnumerateStandardOnlyJson) {
  const auto r = run({"enumerate", "--chi", "-4", "--standard-only"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1].at("case"), "2c");
}

TEST(Cli, EnumerateWarnsOnTheBoxFace) {
  const auto r = run({"enumerate", "--chi", "-4", "--d1-max", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, CasesRealize) {
  const auto r = run({"cases", "--realize"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("realized 25 of 25"), std::string::npos) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 26);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--d", "2,1,1,1", "--b", "-2,-1", "--seed", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("oracle").at("smooth_capable"), true);
  EXPECT_EQ(j.at("agree"), true);
}

TEST(Cli, VerifyOverTinyFieldExhausts) {
  const auto r = run({"verify", "--d", "0,0,0,0", "--b", "0,0", "--prime", "3", "--seed", "1"});
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, X2Lines) {
  const auto r = run({"x2-lines", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seed 7: count 2"), std::string::npos) << r.out;
}

TEST(Cli, SeedFallsBackToEnvironment) {
  const auto flag = run({"x2-lines", "--seed", "12", "--runs", "3"});
  const auto env = run({"x2-lines", "--runs", "3"}, "12");
  EXPECT_EQ(flag.out, env.out);
  EXPECT_EQ(run({"x2-lines"}, "not-a-number").code, 1);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"verify", "--d", "3,2,1,0", "--b", "-3,-1", "--trials", "3", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, CrosscheckSmallBoxAgrees) {
  const auto r = run({"crosscheck", "--d1-max", "1", "--trials", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("disagreements 0"), std::string::npos);
}

TEST(Cli, CrosscheckReportsDisagreements) {
  // (2,2,1,0;-2,0) has Bs|D1| = Y4 with d2 + b1 = 0 and d3 + d4 + b1 < 0.
  const auto r = run({"crosscheck", "--d1-max", "2", "--b-min", "-2", "--b-max", "0", "--trials", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("disagree"), std::string::npos);
  EXPECT_NE(r.out.find("(2,2,1,0;-2,0)"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"classify", "--d", "1,2,3", "--b", "0,0"},
           {"classify", "--d", "0,0,0,0", "--b", "-1,x"},
           {"classify", "--d", "0,0,0,0", "--b", "-1,-1"},
           {"enumerate"},
           {"enumerate", "--chi", "-4", "--format", "xml"},
           {"verify", "--d", "0,0,0,0", "--b", "0,0", "--prime", "9"},
           {"frobnicate"},
       }) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 1) << ::testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("crosscheck"), std::string::npos);
}
