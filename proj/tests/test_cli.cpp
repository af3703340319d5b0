#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lvl/cli.hpp"

using namespace lvl;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lvl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("generate and classify a square") {
  REQUIRE(run({"gen", "square", "--side", "1", "-o", "cli_square.crv"}).code == 0);
  const auto r = run({"classify", "-i", "cli_square.crv", "-e", "0.25"});
  CHECK(r.code == 0);
  CHECK(r.out == "JORDAN\n");
  CHECK(run({"classify", "-i", "cli_square.crv", "-e", "0.75"}).out == "EMPTY\n");
  std::remove("cli_square.crv");
}

TEST_CASE("staircase classification names the branch point") {
  REQUIRE(run({"gen", "staircase", "--teeth", "6", "-o", "cli_stair.crv"}).code == 0);
  const auto r = run({"classify", "-i", "cli_stair.crv", "-e", "0.03125"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NONMANIFOLD(") == 0);
  CHECK(r.out.find("0.218750,0.000000") != std::string::npos);
  const auto v = run({"verify", "ljc", "-i", "cli_stair.crv", "--eps-list", "0.0625,0.03125"});
  CHECK(v.code == 1);
  CHECK(v.out.find("verdict=fail") != std::string::npos);
  std::remove("cli_stair.crv");
}

TEST_CASE("sharp quasicircle fails the uniformity suite at its bump radii") {
  REQUIRE(run({"gen", "sharplqc", "--n", "24", "--nmax", "4", "-o", "cli_lqc.crv"}).code == 0);
  const auto r = run({"verify", "lqc", "-i", "cli_lqc.crv", "--eps-list",
                      "0.015625,0.00390625,0.0009765625,0.000244140625", "--samples", "256"});
  CHECK(r.code == 1);
  std::remove("cli_lqc.crv");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"classify", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "-i", "does_not_exist.crv", "-e", "0.1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"levelset", "--help"}).code == 0);
}

TEST_CASE("outputs are byte-identical across runs and kernels") {
  REQUIRE(run({"gen", "snowflake", "--p", "0.3", "--depth", "2", "--rule", "seeded", "--seed", "3", "-o", "cli_a.crv"})
              .code == 0);
  REQUIRE(run({"gen", "snowflake", "--p", "0.3", "--depth", "2", "--rule", "seeded", "--seed", "3", "-o", "cli_b.crv"})
              .code == 0);
  CHECK(slurp("cli_a.crv") == slurp("cli_b.crv"));
  const auto a = run({"levelset", "-i", "cli_a.crv", "-e", "-0.03"});
  const auto b = run({"--serial", "levelset", "-i", "cli_a.crv", "-e", "-0.03"});
  CHECK(a.out == b.out);
  const auto z1 = run({"twopoint", "-i", "cli_a.crv", "--samples", "256"});
  const auto z2 = run({"--serial", "twopoint", "-i", "cli_a.crv", "--samples", "256"});
  CHECK(z1.out == z2.out);
  CHECK(z1.out.find("kind=two_point") == 0);
  std::remove("cli_a.crv");
  std::remove("cli_b.crv");
}

TEST_CASE("grid method writes polylines") {
  REQUIRE(run({"gen", "circle", "--r", "1", "-o", "cli_circle.crv"}).code == 0);
  const auto r = run({"levelset", "-i", "cli_circle.crv", "-e", "0.5", "--method", "grid", "--h", "0.05"});
  CHECK(r.code == 0);
  CHECK(!r.out.empty());
  std::remove("cli_circle.crv");
}
