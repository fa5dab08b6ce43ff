#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "crg/report.hpp"

namespace crg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CRG_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return nlohmann::json::parse(call(args).out);
}

std::size_t count_status(const nlohmann::json& report, const std::string& status) {
  std::size_t n = 0;
  for (const auto& r : report["records"]) n += r["status"] == status;
  return n;
}

TEST(Cli, VerifyGroupI) {
  const Result r = call({"verify", "--group", "I"});
  EXPECT_EQ(r.code, 0);
  for (const char* c : {"closure", "inverse", "assoc", "identity"})
    EXPECT_NE(r.out.find(std::string("[pass] I ") + c), std::string::npos) << c;
}

TEST(Cli, VerifyAllCoversSixGroupsTimesFourChecks) {
  const auto report = json_of({"verify", "--all"});
  ASSERT_EQ(report["records"].size(), 24u);
  EXPECT_EQ(count_status(report, "pass"), 24u);
  const std::vector<std::string> groups{"I", "II", "III1", "III2", "IV1", "IV2"};
  for (std::size_t k = 0; k < 24; ++k) EXPECT_EQ(report["records"][k]["subject"], groups[k / 4]);
}

TEST(Cli, LieDimension) {
  const Result r = call({"lie", "--group", "III2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension 18"), std::string::npos);
  const auto basis = json_of({"lie", "--group", "I", "--show-basis"});
  EXPECT_EQ(basis["records"][2]["details"].size(), 4u);
}

TEST(Cli, DeriveWithPrintedDiff) {
  const Result r = call({"derive", "--class", "II", "--diff-paper"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[erratum] II entry (4,4)"), std::string::npos);
  EXPECT_EQ(call({"--strict-errata", "derive", "--class", "II", "--diff-paper"}).code, 1);
  EXPECT_EQ(call({"derive", "--class", "II", "--diff-paper", "--strict-errata"}).code, 1);
  EXPECT_EQ(call({"--strict-errata", "derive", "--class", "III1", "--diff-paper"}).code, 0);
}

TEST(Cli, DeriveFromPresetFile) {
  const std::string preset = temp_file("heis.preset",
                                       "pair L Lbar\npair T T\n"
                                       "frame I L Lbar T\ndeclare I units a\n"
                                       "bracket I [L,Lbar] = -I*T\n"
                                       "transfer I L' = a*L\n"
                                       "recipe I T' = I*[L',Lbar']\n"
                                       "name I T' L = b\nname I T' Lbar = conj(b)\n");
  const Result r = call({"derive", "--class", "I", "--preset", preset});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("b := -I*conj(a)*Lbar(a)"), std::string::npos) << r.out;
  EXPECT_EQ(call({"derive", "--class", "II", "--preset", preset}).code, 2);
}

TEST(Cli, TextAndJsonCarryTheSameRecords) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--all"}, {"derive", "--class", "IV2", "--diff-paper"},
        {"classify", "--manifold", data("tube_c3.txt"), "--random", "4"}}) {
    const Result text = call(args);
    const auto report = json_of(args);
    std::istringstream lines(text.out);
    std::string line;
    std::getline(lines, line);  // header
    for (const auto& j : report["records"]) {
      CheckRecord r{j["subject"], j["check"], Status::Pass, std::nullopt, j["details"]};
      r.status = j["status"] == "pass" ? Status::Pass : j["status"] == "fail" ? Status::Fail : Status::Erratum;
      if (j.contains("residual_terms")) r.residual_terms = j["residual_terms"].get<std::size_t>();
      ASSERT_TRUE(std::getline(lines, line));
      EXPECT_EQ(line, to_text(r));
    }
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_EQ(line.rfind("summary: ", 0), 0u);
  }
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"--format", "json", "verify", "--all"};
  EXPECT_EQ(call(args).out, call(args).out);
  const std::vector<std::string> random{"--format", "json", "--seed", "3", "classify", "--manifold",
                                        data("heisenberg.txt"), "--random", "6"};
  EXPECT_EQ(call(random).out, call(random).out);
  std::vector<std::string> other = random;
  other[3] = "4";
  EXPECT_NE(call(random).out, call(other).out);
}

TEST(Cli, Classify) {
  const Result r = call({"classify", "--manifold", data("sphere_c3.txt"), "--point", "0,0,0,0,0", "--point",
                         "1,2,3,4,5,30"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("point (0,0,0,0,0): verdict ClassIV1"), std::string::npos) << r.out;
  const Result tube = call({"classify", "--manifold", data("tube_c3.txt"), "--point", "0,0,0,0,0"});
  EXPECT_NE(tube.out.find("verdict ClassIV2-candidate"), std::string::npos);
  const Result c2 = call({"classify", "--manifold", data("heisenberg.txt"), "--point=-1,1/2,0"});
  EXPECT_NE(c2.out.find("verdict ClassI;"), std::string::npos) << c2.out;
  // Off the graph: a failed check, not a usage error.
  EXPECT_EQ(call({"classify", "--manifold", data("heisenberg.txt"), "--point", "1,0,0,0"}).code, 1);
}

TEST(Cli, Multiplier) {
  const std::string m = data("heisenberg.txt");
  const Result r = call({"multiplier", "--map", data("dilation_map.txt"), "--source", m, "--target", m, "--point", "1,2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a = (3/2-I); residual = 0"), std::string::npos) << r.out;
  const std::string square = temp_file("square.map", "z -> z'^2\nw -> w'\n");
  const Result z = call({"multiplier", "--map", square, "--source", m, "--target", m, "--point", "0,0,0"});
  EXPECT_EQ(z.code, 1);
  EXPECT_NE(z.out.find("vanishes"), std::string::npos);
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "verify", "--all"}).code, 2);
  EXPECT_EQ(call({"verify"}).code, 2);
  EXPECT_EQ(call({"verify", "--group", "V"}).code, 2);
  EXPECT_EQ(call({"verify", "--all", "--check", "speed"}).code, 2);
  EXPECT_EQ(call({"lie"}).code, 2);
  EXPECT_EQ(call({"classify", "--manifold", "/nonexistent/m.txt", "--point", "0,0,0"}).code, 2);
  EXPECT_EQ(call({"classify", "--manifold", data("heisenberg.txt")}).code, 2);
  EXPECT_EQ(call({"classify", "--manifold", data("heisenberg.txt"), "--point", "1,2"}).code, 2);

  const std::string bad = temp_file("bad.m", "ambient C2\nphi = x^2 + (y\n");
  const Result r = call({"classify", "--manifold", bad, "--point", "0,0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("manifold line 2: "), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("column"), std::string::npos) << r.err;
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(call({"--help"}).code, 0);
  const Result v = call({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
}

}  // namespace
}  // namespace crg::cli
