#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "pcst/io.hpp"

namespace fs = std::filesystem;
using pcst::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pcst::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pcst_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenIsDeterministic) {
  Invocation a = run({"gen", "random", "--n", "6", "--edge-prob", "1/3", "--seed", "9", "--max-profit", "4"});
  Invocation b = run({"gen", "random", "--n", "6", "--edge-prob", "1/3", "--seed", "9", "--max-profit", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  json doc = json::parse(a.out);
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["manifest"]["seed"], 9);
  EXPECT_EQ(doc["vertices"].size(), 6u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"gen", "counterexample", "--n", "0"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"solve"}).code, 1);
  EXPECT_EQ(run({"solve", path("missing.json")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  write("bad.json", "{\"root\": ");
  Invocation bad = run({"solve", path("bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"gen", "setcover", "--elements", "2", "--set", "1:1"}).code, 1);
  Invocation cover = run({"gen", "setcover", "--elements", "3", "--set", "2:1,2", "--set", "3:3", "--set", "6:1,2,3"});
  ASSERT_EQ(cover.code, 0);
  EXPECT_EQ(json::parse(cover.out)["vertices"].size(), 7u);
}

TEST_F(Cli, SolveVerifyRoundTrip) {
  ASSERT_EQ(run({"gen", "counterexample", "--n", "3", "-o", path("ce.json")}).code, 0);
  EXPECT_EQ(run({"solve", path("ce.json"), "--lmp", "--baseline"}).code, 1);
  Invocation solved = run({"solve", path("ce.json"), "--verify", "--trace", "-o", path("sol.json")});
  ASSERT_EQ(solved.code, 0) << solved.err;
  json doc = json::parse(read("sol.json"));
  EXPECT_EQ(doc["result"]["objective"], "12");
  EXPECT_TRUE(doc["verification"]["ok"].get<bool>());
  EXPECT_EQ(doc["manifest"]["mode"], "pcst");
  EXPECT_EQ(doc["result"]["phases"].size(), 3u);

  EXPECT_EQ(run({"verify", path("ce.json"), path("sol.json")}).code, 0);
  doc["result"]["objective"] = "11";
  write("tampered.json", doc.dump());
  EXPECT_EQ(run({"verify", path("ce.json"), path("tampered.json")}).code, 2);
}

TEST_F(Cli, OtherModes) {
  ASSERT_EQ(run({"gen", "counterexample", "--n", "3", "-o", path("ce.json")}).code, 0);
  Invocation base = run({"solve", path("ce.json"), "--baseline", "--verify"});
  ASSERT_EQ(base.code, 0) << base.err;
  EXPECT_EQ(json::parse(base.out)["result"]["dual_total"], "7");
  Invocation lmp = run({"solve", path("ce.json"), "--lmp", "--verify", "-o", path("lmp.json")});
  ASSERT_EQ(lmp.code, 0) << lmp.err;
  EXPECT_EQ(run({"verify", path("ce.json"), path("lmp.json")}).code, 0);
  Invocation oracle = run({"oracle", path("ce.json")});
  ASSERT_EQ(oracle.code, 0);
  EXPECT_EQ(json::parse(oracle.out)["result"]["value"], "12");
  EXPECT_EQ(run({"solve", path("ce.json"), "--quota", "1"}).code, 1);
}

TEST_F(Cli, QuotaMode) {
  ASSERT_EQ(run({"gen", "random", "--n", "7", "--edge-prob", "1", "--seed", "3", "--max-profit", "5", "-o",
                 path("r.json")})
                .code,
            0);
  Invocation q = run({"solve", path("r.json"), "--quota", "4", "--verify", "-o", path("q.json")});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(run({"verify", path("r.json"), path("q.json")}).code, 0);
  Invocation o = run({"oracle", path("r.json"), "--quota", "4", "-o", path("o.json")});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(run({"verify", path("r.json"), path("o.json")}).code, 0);
  EXPECT_EQ(run({"oracle", path("r.json"), "--quota", "1000"}).code, 1);
}
