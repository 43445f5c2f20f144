#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace wallkit::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_pic(std::string const& file, json const& j) {
  auto path = std::filesystem::temp_directory_path() / file;
  std::ofstream(path) << j.dump();
  return path.string();
}

std::vector<int> unit(std::size_t k) {
  std::vector<int> v(16, 0);
  v[k] = 1;
  return v;
}

}  // namespace

TEST(Cli, LatticeShow) {
  auto r = call({"lattice", "show", "--lattice", "Lambda"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = r.parsed();
  EXPECT_EQ(j["rank"], 16);
  EXPECT_EQ(j["det"], -256);
  EXPECT_EQ(j["even"], true);
}

TEST(Cli, ClassShow) {
  auto r = call({"class", "show", "--name", "delta_prime"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["q"], -4);
  EXPECT_EQ(r.parsed()["div"], 2);

  auto bad = call({"class", "show", "--name", "nothing"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_EQ(bad.error()["error"], "UnknownName");
}

TEST(Cli, VecInvariantsAndClassify) {
  auto r = call({"vec", "invariants", "--coords=0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["q"], -4);
  EXPECT_EQ(r.parsed()["div"], 2);
  EXPECT_EQ(r.parsed()["primitive"], true);

  auto c = call({"classify", "--coords", "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(c.parsed()["case"], 4);
  EXPECT_EQ(c.parsed()["ambient"], "Lambda");

  auto imprimitive = call({"classify", "--coords", "0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,0"});
  EXPECT_EQ(imprimitive.code, kExitPrecondition);
  EXPECT_EQ(imprimitive.error()["error"], "Imprimitive");

  auto wrong_rank = call({"classify", "--coords", "1,2,3"});
  EXPECT_NE(wrong_rank.code, kExitOk);
}

TEST(Cli, WallTest) {
  auto r = call({"wall", "test", "--coords", "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["is_wall"], false);
  auto d = call({"wall", "test", "--coords", "0,0,0,0,0,0,0,0,0,0,0,0,0,0,3,3"});
  EXPECT_EQ(d.parsed()["is_wall"], true);
  EXPECT_EQ(d.parsed()["q"], -4);
  auto k3 = call({"wall", "test", "--lattice", "LambdaK3", "--rule", "K3",
                  "--coords=1,-1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0"});
  ASSERT_EQ(k3.code, kExitOk) << k3.err;
  EXPECT_EQ(k3.parsed()["is_wall"], true);
  auto bad_rule = call({"wall", "test", "--rule", "Other", "--coords", "1"});
  EXPECT_EQ(bad_rule.code, kExitUsage);
}

TEST(Cli, WallsEnumAndKahler) {
  auto path = write_pic("wallkit_cli_pic.json", {{"ambient", "Lambda"}, {"basis", {unit(14), unit(15)}}});
  auto r = call({"walls", "enum", "--pic", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["walls"].size(), 2u);
  EXPECT_EQ(r.parsed()["complete"], true);

  // omega = 3 L2_1 - h1, alpha = 3 L2_1 + h1
  auto k = call({"kahler", "test", "--pic", path, "--omega=3,1,0,0,0,0,0,0,0,0,0,0,0,0,-1,0",
                 "--alpha=3,1,0,0,0,0,0,0,0,0,0,0,0,0,1,0"});
  ASSERT_EQ(k.code, kExitOk) << k.err;
  EXPECT_EQ(k.parsed()["inside"], false);
  auto on_wall = call({"kahler", "test", "--pic", path, "--omega=1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
                       "--alpha=3,1,0,0,0,0,0,0,0,0,0,0,0,0,1,0"});
  EXPECT_EQ(on_wall.code, kExitPrecondition);
  EXPECT_EQ(on_wall.error()["error"], "OmegaOnWall");

  auto doubled = unit(14);
  doubled[14] = 2;
  auto unsat = write_pic("wallkit_cli_unsat.json", {{"ambient", "Lambda"}, {"basis", {doubled}}});
  auto u = call({"walls", "enum", "--pic", unsat});
  EXPECT_EQ(u.code, kExitPrecondition);
  EXPECT_EQ(u.error()["error"], "NotSaturated");

  auto missing = call({"walls", "enum", "--pic", "/nonexistent/pic.json"});
  EXPECT_EQ(missing.code, kExitUsage);
}

TEST(Cli, DiscOrbits) {
  auto r = call({"disc", "--lattice", "E8(-2)", "--orbits"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["order"], 256);
  EXPECT_EQ(r.parsed()["orbit_sizes"], json({1, 120, 135}));
}

TEST(Cli, Eichler) {
  auto r = call({"eichler", "--lattice", "LambdaHat3", "--v=2,-2,0,0,0,0,-1", "--w=-2,2,0,0,0,0,-1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["image"], json({-2, 2, 0, 0, 0, 0, -1}));
  EXPECT_EQ(r.parsed()["disc_action_trivial"], true);
  auto mismatch = call({"eichler", "--lattice", "LambdaHat3", "--v=1,0,0,0,0,0,0", "--w=0,0,0,0,0,0,1"});
  EXPECT_EQ(mismatch.code, kExitPrecondition);
  EXPECT_EQ(mismatch.error()["error"], "InvariantMismatch");
}

TEST(Cli, Verify) {
  auto r = call({"verify", "--suite", "generic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.parsed()["pass"], true);
  auto bad = call({"verify", "--suite", "nope"});
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"classify"}).code, kExitUsage);
  EXPECT_EQ(call({"lattice", "show", "--lattice", "Nope"}).code, kExitUsage);
  EXPECT_EQ(call({"vec", "invariants", "--coords", "1,x"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, PrettyFlag) {
  auto r = call({"class", "show", "--name", "h1", "--pretty"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out.empty());
}
