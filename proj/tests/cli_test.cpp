#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace shufcompat::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, DistExample) {
  const auto r = invoke({"dist", "--stat", "des", "3 1", "2 4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "1:3 2:3\n");
}

TEST(CliTest, ShufflesStreamInOrder) {
  const auto r = invoke({"shuffles", "3 1", "2 4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "3 1 2 4\n3 2 1 4\n3 2 4 1\n2 3 1 4\n2 3 4 1\n2 4 3 1\n");
}

TEST(CliTest, SizeGuard) {
  const auto big = invoke({"shuffles", "1 2 3 4 5 6 7 8", "9 10 11 12 13 14 15"});
  EXPECT_EQ(big.code, kExitUsage);
  const auto forced = invoke({"--force", "dist", "--stat", "des", "1 2 3 4 5 6 7 8",
                              "9 10 11 12 13 14 15"});
  EXPECT_EQ(forced.code, kExitPass);
}

TEST(CliTest, PhiGoldenExample) {
  auto r = invoke({"phi", "--ell", "4", "--pi", "6 3 5 1 2 7 4", "--pi-prime",
                   "6 1 4 5 2 7 3", "--tau", "6 3 11 8 5 9 1 2 7 10 4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "6 1 4 11 8 5 9 2 7 10 3\n");
  r = invoke({"phi", "--ell", "4", "--pi", "6 3 5 1 2 7 4", "--pi-prime",
              "6 1 4 5 2 7 3", "--tau", "6 1 4 11 8 5 9 2 7 10 3", "--inverse"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "6 3 11 8 5 9 1 2 7 10 4\n");
}

TEST(CliTest, VerifyExitCodes) {
  auto r = invoke({"verify", "--stat", "udr_pk_des", "--n", "4", "--m", "3",
                   "--mode", "reduced"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");

  r = invoke({"verify", "--stat", "bir", "--n", "2", "--m", "2"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("pi=1 2\npi_prime=2 1\nsigma=3 4\n"), std::string::npos);

  EXPECT_EQ(invoke({"verify", "--stat", "udr", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--stat", "nope", "--n", "2", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--stat", "first", "--n", "2", "--m", "2"}).code, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"stats", "1 1 2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"dist", "--stat", "des", "1 2", "2 3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"canonicalize", "1"}).code, kExitUsage);
  const auto r = invoke({"phi", "--ell", "3", "--pi", "6 5 3 4 7 9 2", "--pi-prime",
                         "6 5 3 4 7 9 2", "--tau", "6 5 3 4 7 9 2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, StatsAndCanonicalize) {
  auto r = invoke({"stats", "6 5 3 4 7 9 2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("{1,2,6}"), std::string::npos);

  r = invoke({"canonicalize", "6 3 5 1 2 7 4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out.rfind("ell=4 src=6 3 5 1 2 7 4 dst=", 0), 0u);
  EXPECT_NE(r.out.find("class=3:7:2:3"), std::string::npos);

  r = invoke({"canonicalize", "6 3 5 1 2 7 4", "--sigma", "11 8 9 10"});
  EXPECT_EQ(r.code, kExitPass);
  std::size_t arrows = 0;
  for (std::size_t at = r.out.find(" -> "); at != std::string::npos;
       at = r.out.find(" -> ", at + 1)) {
    ++arrows;
  }
  EXPECT_EQ(arrows, 330u);
}

TEST(CliTest, Stanley) {
  auto r = invoke({"stanley", "--eq", "1", "3 1", "2 4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("q + q^2 + 2 q^3 + q^4 + q^5"), std::string::npos);
  EXPECT_NE(r.out.find("verdict=PASS"), std::string::npos);
  r = invoke({"stanley", "--eq", "2", "--k", "0", "3 1", "2 4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("verdict=PASS"), std::string::npos);
  EXPECT_EQ(invoke({"stanley", "--eq", "3", "3 1", "2 4"}).code, kExitUsage);
}

TEST(CliTest, DeterministicAcrossJobs) {
  for (const char* stat : {"udr_pk_des", "bir", "maj_des"}) {
    for (const char* mode : {"full", "reduced"}) {
      const auto one = invoke({"verify", "--stat", stat, "--n", "3", "--m", "3",
                               "--mode", mode, "--jobs", "1"});
      const auto many = invoke({"verify", "--stat", stat, "--n", "3", "--m", "3",
                                "--mode", mode, "--jobs", "8"});
      EXPECT_EQ(one.out, many.out);
      EXPECT_EQ(one.code, many.code);
      EXPECT_EQ(one.out, invoke({"verify", "--stat", stat, "--n", "3", "--m", "3",
                                 "--mode", mode, "--jobs", "1"})
                             .out);
    }
  }
}

TEST(CliTest, JsonOutputParses) {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "stats", "6 5 3 4 7 9 2"},
      {"--json", "shuffles", "3 1", "2 4"},
      {"--json", "dist", "--stat", "des", "3 1", "2 4"},
      {"--json", "verify", "--stat", "des", "--n", "2", "--m", "2"},
      {"--json", "canonicalize", "6 3 5 1 2 7 4", "--sigma", "8"},
      {"--json", "phi", "--ell", "4", "--pi", "6 3 5 1 2 7 4", "--pi-prime",
       "6 1 4 5 2 7 3", "--tau", "6 3 11 8 5 9 1 2 7 10 4"},
      {"--json", "stanley", "--eq", "2", "3 1", "2 4"},
  };
  for (const auto& args : commands) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, kExitPass) << args[1] << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << args[1];
  }
  const auto shuffles = nlohmann::json::parse(invoke(commands[1]).out);
  ASSERT_TRUE(shuffles.contains("shuffles"));
  EXPECT_EQ(shuffles["shuffles"].size(), 6u);
}

}  // namespace
}  // namespace shufcompat::cli
