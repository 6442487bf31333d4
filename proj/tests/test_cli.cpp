#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hypgeo/cli.hpp"
#include "json.hpp"

namespace hypgeo::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err, false);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = invoke(std::move(args));
  return nlohmann::json::parse(r.out);
}

TEST(ParsePoints, AcceptsAndRejects) {
  const auto pts = parse_points("(0.5,0); ( -1e-3 , 2 )", 2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1][0], -1e-3);
  EXPECT_EQ(pts[1][1], 2.0);
  EXPECT_THROW((void)parse_points("(0.5,0)", 3), UsageError);
  EXPECT_THROW((void)parse_points("(0.5,x)", 2), UsageError);
  EXPECT_THROW((void)parse_points("(nan,0)", 2), UsageError);
  EXPECT_THROW((void)parse_points("0.5,0", 2), UsageError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::log(3.0)), "1.0986122886681098");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Cli, DistText) {
  const Result r = invoke({"dist", "--points", "(0,0);(0.5,0)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("rho: 1.0986122886681098"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("status: ok"), std::string::npos);
}

TEST(Cli, DistJsonRoundTrips) {
  const nlohmann::json doc = invoke_json({"dist", "--model", "half", "--points", "(0,1);(0,2)"});
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["command"], "dist");
  EXPECT_EQ(doc["model"], "half");
  EXPECT_NEAR(doc["result"]["rho"].get<double>(), std::log(2.0), 1e-15);
  EXPECT_EQ(nlohmann::json::parse(doc.dump()), doc);
}

TEST(Cli, DomainErrorsExitOne) {
  const Result r = invoke({"dist", "--points", "(1.2,0);(0,0)"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.out.find("status: error"), std::string::npos);
  const nlohmann::json doc = invoke_json({"midpoint", "--points", "(0.1,0.1);(0.1,0.1)"});
  EXPECT_EQ(doc["status"], "error");
  EXPECT_TRUE(doc["error"].contains("code"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"dist", "--points", "(0.5,0)"}).code, kExitUsage);
  EXPECT_EQ(invoke({"dist", "--points", "(0.5,0);(0,0)", "--dim", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"teleport"}).code, kExitUsage);
  EXPECT_EQ(invoke({"ball", "--points", "(0.5,0)"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--suite", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(invoke({"render", "--points", "(0.5,0);(0,0.5)"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
}

TEST(Cli, MidpointAndGeodesic) {
  const nlohmann::json m = invoke_json({"midpoint", "--points", "(0.8,0);(0,0)"});
  EXPECT_NEAR(m["result"]["midpoint"][0].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(m["result"]["rho_xz"].get<double>(), m["result"]["rho_zy"].get<double>(), 1e-12);
  const nlohmann::json g = invoke_json({"geodesic", "--model", "half", "--points", "(-1,1);(1,1)"});
  EXPECT_EQ(g["status"], "ok");
  EXPECT_NEAR(g["result"]["rho"].get<double>(), std::acosh(3.0), 1e-15);
}

TEST(Cli, BallCommand) {
  const nlohmann::json b = invoke_json({"ball", "--points", "(0.5,0)", "--radius", "1.0986122886681098"});
  ASSERT_EQ(b["status"], "ok") << b.dump();
  EXPECT_NEAR(b["result"]["euclidean_radius"].get<double>(), 0.4, 1e-15);
}

TEST(Cli, BoundsTable) {
  const Result r = invoke({"bounds", "--points", "(0.5,0);(0,0.5)"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* name : {"b1", "b7", "chord", "circumscribed", "midpoint", "symmetric-chord"})
    EXPECT_NE(r.out.find(std::string("name: ") + name), std::string::npos) << name;
  const nlohmann::json doc = invoke_json({"bounds", "--points", "(0.5,0);(0,0)"});
  EXPECT_EQ(doc["result"]["valid"], true);
  EXPECT_EQ(doc["result"]["ordering"]["c5_le_c3"], false);
  const nlohmann::json half = invoke_json({"bounds", "--model", "half", "--points", "(-1,1);(1,1)"});
  EXPECT_EQ(half["result"]["h2_beats_h1"], true);
}

TEST(Cli, VerifyGoldenAndDeterminism) {
  const Result a = invoke({"verify", "--suite", "golden"});
  const Result b = invoke({"verify", "--suite", "golden"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const nlohmann::json doc = invoke_json({"verify", "--suite", "remark", "--samples", "500"});
  EXPECT_EQ(doc["result"]["status"], "PASS") << doc.dump(2);
}

TEST(Cli, RenderWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "hypgeo_cli_render.svg";
  std::filesystem::remove(path);
  const Result r = invoke({"render", "--points", "(0.5,0);(0,0.5)", "--svg", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"render", "--points", "(0.5,0);(0,0.5)", "--svg", "/nonexistent-dir/x.svg"}).code, kExitDomain);
}

}  // namespace
}  // namespace hypgeo::cli
