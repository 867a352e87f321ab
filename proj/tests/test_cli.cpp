#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace lambdadelta;
using nlohmann::json;

namespace {

struct Run {
  int code;
  json doc;
  std::string text;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = cli::run(args, out);
  return {code, json::parse(out.str()), out.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lambdadelta_test_" + name);
}

const std::string kLoop =
    "(appl (abst *0 (appl *1 (appl #0 #0))) (abst *0 (appl *1 (appl #0 #0))))";

}  // namespace

TEST(Cli, CheckValid) {
  const auto r = run({"check", "--env", "[]", "*0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["ok"], true);
  EXPECT_EQ(r.doc["result"]["valid"], true);
}

TEST(Cli, CheckInvalid) {
  const auto r = run({"check", "(appl *0 (abst *0 #0))"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc["ok"], false);
  EXPECT_EQ(r.doc["result"]["valid"], false);
  EXPECT_EQ(r.doc["result"]["rule"], "appl");
}

TEST(Cli, Normalize) {
  const auto r = run({"nf", "--env", "[]", "(cast *0 *1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["result"], "*1");
  const auto d = run({"nf", "--fuel", "50", "(appl (abst *0 (appl #0 #0)) (abst *0 (appl #0 #0)))"});
  EXPECT_EQ(d.code, 3);
  EXPECT_TRUE(d.doc.contains("error"));
}

TEST(Cli, BigTreeCycle) {
  const auto r = run({"bigtree", "--env", "[]", kLoop});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.doc["result"]["status"], "cycle");
  EXPECT_TRUE(r.doc["result"]["cycle"].is_array());
}

TEST(Cli, BigTreeGraph) {
  const auto path = temp_file("graph.txt");
  const auto r = run({"bigtree", "--graph", path.string(), "(cast *1 *0)"});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    EXPECT_NE(line.find(" -> "), std::string::npos);
    ++lines;
  }
  EXPECT_EQ(lines, r.doc["result"]["edges"].get<std::size_t>());
  std::filesystem::remove(path);
}

TEST(Cli, Csx) {
  const auto r = run({"csx", "*0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["result"]["nodes"], 3);
  EXPECT_EQ(run({"csx", "(appl (abst *0 (appl #0 #0)) (abst *0 (appl #0 #0)))"}).code, 4);
  EXPECT_EQ(run({"csx", "--budget", "1", "(abst *0 (cast *0 #0))"}).code, 3);
}

TEST(Cli, ParseAndErrors) {
  const auto r = run({"parse", "--env", "[dec *0; def #0]", " ( abst *0   #0 )"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["result"]["term"], "(abst *0 #0)");
  EXPECT_EQ(r.doc["result"]["env"], "[dec *0; def #0]");
  EXPECT_EQ(run({"parse", "(appl"}).code, 2);
  EXPECT_EQ(run({"parse", "--env", "[dec", "*0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "--c", "0", "*0"}).code, 2);
  EXPECT_EQ(run({"props", "--suite", "nonsense"}).code, 2);
}

TEST(Cli, Statics) {
  EXPECT_EQ(run({"arity", "(abst *0 #0)"}).doc["result"], "(o -> o)");
  EXPECT_EQ(run({"arity", "(appl *0 *1)"}).code, 1);
  EXPECT_EQ(run({"degree", "--env", "[dec *0]", "#0"}).doc["result"], 3);
  EXPECT_EQ(run({"degree", "--D", "5", "*0"}).doc["result"], 5);
  EXPECT_EQ(run({"degree", "#0"}).code, 1);
  EXPECT_EQ(run({"stype", "--n", "1", "--env", "[dec (cast *1 *2)]", "#0"}).doc["result"], "*2");
  EXPECT_EQ(run({"stype", "--n", "2", "--c", "2", "*0"}).doc["result"], "*4");
}

TEST(Cli, ReductsAndConversion) {
  EXPECT_EQ(run({"reducts", "--env", "[def *0]", "#0"}).doc["result"], json::array({"*0", "#0"}));
  EXPECT_EQ(run({"reducts", "--extended", "*0"}).doc["result"], json::array({"*0", "*1"}));
  EXPECT_EQ(run({"conv", "(cast *0 *1)", "*1"}).code, 0);
  EXPECT_EQ(run({"conv", "*0", "*1"}).code, 1);
}

TEST(Cli, LazyEquivalence) {
  EXPECT_EQ(run({"lleq", "--l", "0", "--t", "*0", "[dec *0]", "[dec *1]"}).code, 0);
  EXPECT_EQ(run({"lleq", "--l", "0", "--t", "#0", "[dec *0]", "[dec *1]"}).code, 1);
}

TEST(Cli, Props) {
  const auto r = run({"props", "--suite", "diamond", "--size", "3", "--envlen", "1", "--maxsort", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["result"]["suite"], "diamond");
  EXPECT_EQ(r.doc["result"]["closures"], enumerate_closures(3, 1, 1).size());
  EXPECT_TRUE(r.doc["result"]["counterexamples"].empty());
}

TEST(Cli, ConfigFile) {
  const auto path = temp_file("config.txt");
  {
    std::ofstream out(path);
    out << "# sorts step by two\nc = 2\nD=3\n\nfuel=10  # small\n";
  }
  EXPECT_EQ(run({"stype", "--config", path.string(), "--n", "1", "*0"}).doc["result"], "*2");
  EXPECT_EQ(run({"degree", "--config", path.string(), "*0"}).doc["result"], 3);
  EXPECT_EQ(run({"degree", "--config", path.string(), "--D", "1", "*0"}).doc["result"], 1);
  {
    std::ofstream out(path);
    out << "colour=blue\n";
  }
  EXPECT_EQ(run({"degree", "--config", path.string(), "*0"}).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"degree", "--config", path.string(), "*0"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bigtree", kLoop}, {"bigtree", "(abst *1 #0)"}, {"reducts", "--extended", "(cast *0 (abst *0 #0))"}}) {
    EXPECT_EQ(run(args).text, run(args).text);
  }
}
