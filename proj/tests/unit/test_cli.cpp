#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using namespace gradedga;
using gradedga::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kRiesz = R"({"algebra":[2,2,0],"coeffs":{"e12":0.5,"e14":0.5,"e23":-0.5,"e34":-0.5}})";

}  // namespace

TEST(Cli, DecomposeRiesz) {
  const Result r = run({"decompose", "--algebra", "2,2"}, kRiesz);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["lambdas"].size(), 2u);
  EXPECT_NEAR(j["lambdas"][0][0].get<double>(), 0.0, 1e-14);
  EXPECT_NEAR(j["lambdas"][0][1].get<double>(), 0.5, 1e-14);
  EXPECT_NEAR(j["lambdas"][1][1].get<double>(), -0.5, 1e-14);
  EXPECT_EQ(j["blades"].size(), 2u);
}

TEST(Cli, ExpOfZero) {
  const Result r = run({"exp", "--algebra", "3,0,1"}, R"({"coeffs":{}})");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["coeffs"].dump(), R"({"1":[1,0]})");
  EXPECT_EQ(r.out, "{\"algebra\":[3,0,1],\"coeffs\":{\"1\":[1,0]}}\n");
}

TEST(Cli, DomainErrorsExitTwo) {
  const Result r = run({"decompose", "--algebra", "4,0"}, R"({"coeffs":{"e12":1,"e34":1}})");
  EXPECT_EQ(r.code, 2);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["error"], "DegenerateRoots");
  EXPECT_TRUE(j.contains("detail"));
  const Result l = run({"log", "--algebra", "3,0"}, R"({"coeffs":{"1":-1}})");
  EXPECT_EQ(l.code, 2);
  EXPECT_EQ(Json::parse(l.out)["error"], "AxisUndefined");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"pow", "--algebra", "3,0"}, R"({"coeffs":{"1":1}})").code, 1);
  EXPECT_EQ(run({"exp", "--algebra", "3"}, R"({"coeffs":{}})").code, 1);
  EXPECT_EQ(run({"exp", "--algebra", "3,0"}, "not json").code, 1);
  EXPECT_EQ(run({"exp", "--algebra", "3,0"}, R"({"algebra":[2,0,0],"coeffs":{}})").code, 1);
  EXPECT_EQ(run({"exp", "--algebra", "13,0"}, R"({"coeffs":{}})").code, 1);
  EXPECT_EQ(run({"demo", "nonsense"}).code, 1);
}

TEST(Cli, OutputRoundTrips) {
  const Result r = run({"exp", "--algebra", "3,0,1"}, R"({"coeffs":{"e12":0.3,"e01":[0.1,0.2],"e23":-1.5}})");
  ASSERT_EQ(r.code, 0) << r.err;
  const Multivector x = multivector_from_json(Json::parse(r.out));
  EXPECT_EQ(dump(to_json(x)) + "\n", r.out);
  const Result again = run({"exp", "--algebra", "3,0,1"}, R"({"coeffs":{"e12":0.3,"e01":[0.1,0.2],"e23":-1.5}})");
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, FactorAndSandwich) {
  const Result f = run({"factor"}, R"({"algebra":[3,0,0],"coeffs":{"e3":1}})");
  ASSERT_EQ(f.code, 0) << f.err;
  const Json j = Json::parse(f.out);
  EXPECT_EQ(j["parity"], "odd");
  EXPECT_FALSE(j["reflection"].is_null());
  const Result s = run({"sandwich"}, R"({"versor":{"algebra":[2,0,0],"coeffs":{"e1":1}},"operand":{"coeffs":{"e2":1}}})");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)["coeffs"]["e2"][0], 1.0);
}

TEST(Cli, MatrixRepFormats) {
  const Result j = run({"matrix-rep", "--order", "1,e1,e2,e21"},
                       R"({"algebra":[0,2,0],"coeffs":{"1":1,"e1":2,"e2":3,"e12":-4}})");
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(Json::parse(j.out)["matrix"][0][1][0], -2.0);
  const Result c = run({"matrix-rep", "--format", "csv", "--order", "1,e1,e2,e21"},
                       R"({"algebra":[0,2,0],"coeffs":{"1":1,"e1":2,"e2":3,"e12":-4}})");
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "1,-2,-3,-4");
  const Result b = run({"matrix-rep", "--basis", "--algebra", "1,0"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(Json::parse(b.out)["generators"][0].dump(), "[[0,1],[1,0]]");
}

TEST(Cli, ConjMatrixBlocks) {
  const Result r = run({"conj-matrix", "--blocks"}, R"({"algebra":[3,0,1],"coeffs":{"1":1,"e01":0.5}})");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["D2"].size(), 4u);
  EXPECT_EQ(j["D3"].size(), 6u);
}

TEST(Cli, DemosReportAndExit) {
  for (const char* name : {"riesz", "chasles", "pauli", "e3-blocks", "wigner"}) {
    const Result r = run({"demo", name, "--seed", "7"});
    const Json j = Json::parse(r.out);
    EXPECT_EQ(r.code, j["pass"].get<bool>() ? 0 : 3) << name;
    EXPECT_FALSE(j["checks"].empty());
  }
  EXPECT_EQ(run({"demo", "riesz"}).code, 0);
  EXPECT_EQ(run({"demo", "chasles"}).code, 0);
}

TEST(Cli, TextFormat) {
  const Result r = run({"exp", "--algebra", "3,0", "--format", "text"}, R"({"coeffs":{}})");
  EXPECT_EQ(r.out, "1\n");
}
