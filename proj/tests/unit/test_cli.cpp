#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "supero/app/cli.hpp"
#include "supero/json_io.hpp"

using supero::app::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::size_t> dims_of(const std::string& json) {
  return supero::Json::parse(json).at("dims").get<std::vector<std::size_t>>();
}

}  // namespace

TEST(Cli, BuildFamilies) {
  auto r = call({"build", "gl", "2", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(supero::Json::parse(r.out).at("dim"), 9);
  r = call({"build", "q", "2"});
  EXPECT_EQ(supero::Json::parse(r.out).at("dim"), 8);
  r = call({"build", "gl", "0", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("empty algebra"), std::string::npos);
}

TEST(Cli, CohomologyExamples) {
  auto r = call({"coh", "gl", "1", "1", "--sub", "g0", "--mod", "trivial", "-N", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(dims_of(r.out), (std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1}));
  r = call({"coh", "sl", "2", "0", "--sub", "borel", "--mod", "trivial", "-N", "3", "--format", "json"});
  EXPECT_EQ(dims_of(r.out), (std::vector<std::size_t>{1, 0, 0, 0}));
  r = call({"coh", "gl", "1", "1", "--sub", "full", "--mod", "trivial", "-N", "2", "--format", "json"});
  EXPECT_EQ(dims_of(r.out), (std::vector<std::size_t>{1, 0, 0}));
  r = call({"coh", "gl", "2", "1", "--sub", "levi", "--H", "1,1,0", "--mod", "dual(natural)*natural", "-N", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("H dims"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"coh", "gl", "1", "1", "--sub", "nonsense"}).code, 2);
  EXPECT_EQ(call({"coh", "gl", "1", "1", "--mod", "natural*"}).code, 2);
  EXPECT_EQ(call({"coh", "gl", "2", "1", "--sub", "levi", "--H", "1,1"}).code, 2);
  EXPECT_EQ(call({"coh", "gl", "2", "1", "--sub", "borel", "--H", "1,1,1"}).code, 2);
  EXPECT_EQ(call({"coh", "gl", "1", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"verify", "nope"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, SubalgebraFromFile) {
  const std::string path = ::testing::TempDir() + "supero_span.json";
  {
    std::ofstream f(path);
    f << R"({"label": "x", "vectors": [[[2, [1, 1]]]]})";
  }
  auto r = call({"coh", "gl", "1", "1", "--sub", "file:" + path, "-N", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  EXPECT_EQ(call({"coh", "gl", "1", "1", "--sub", "file:" + path}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, VerifyWritesFileAndIsDeterministic) {
  const std::string a = ::testing::TempDir() + "supero_a.json", b = ::testing::TempDir() + "supero_b.json";
  ASSERT_EQ(call({"verify", "jacobi", "--format", "json", "--out", a}).code, 0);
  ASSERT_EQ(call({"verify", "jacobi", "--format", "json", "--out", b}).code, 0);
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
  EXPECT_TRUE(supero::Json::parse(sa).at("all_pass").get<bool>());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(Cli, RootsCommand) {
  auto r = call({"roots", "pt", "2", "--H", "2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = supero::Json::parse(r.out);
  EXPECT_FALSE(j.at("roots").at("symmetric").get<bool>());
  EXPECT_EQ(j.at("schema"), "superO/1");
}
