#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cardmetric/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string sample(const std::string& name) { return std::string(CARDMETRIC_SAMPLES_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cardmetric::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

cardmetric::Json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return cardmetric::Json::parse(r.out);
}

TEST(Cli, NormOfTransposition) {
  auto r = run({"norm", "--spec", sample("s3.json"), "--element", "(1 3)", "--metric", "cardinal"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run({"norm", "--spec", sample("s3_t.json"), "--element", "(1 3)"}).out, "1\n");
  EXPECT_EQ(run({"norm", "--spec", sample("s3.json"), "--element", "(1 3)", "--metric", "word"}).out, "2\n");
}

TEST(Cli, DistanceIdentity) {
  auto r = run({"dist", "--spec", sample("s3.json"), "--from", "e", "--to", "e", "--metric", "word"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, IntegerDistances) {
  EXPECT_EQ(run({"dist", "--spec", sample("z.json"), "--from", "3", "--to", "-7", "--metric", "word"}).out, "10\n");
  EXPECT_EQ(run({"dist", "--spec", sample("z.json"), "--from", "3", "--to", "-7"}).out, "1\n");
  EXPECT_EQ(run({"norm", "--spec", sample("z3.json"), "--element", "[1,1,1]"}).out, "3\n");
  EXPECT_EQ(run({"norm", "--spec", sample("z3.json"), "--element", "0,5,-2"}).out, "2\n");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--spec", sample("s3.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  std::istringstream lines(r.out);
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    ASSERT_LT(i, cardmetric::check_ids.size());
    EXPECT_EQ(line, "PASS " + std::string(cardmetric::check_ids[i++]));
  }
  EXPECT_EQ(i, 12u);
}

TEST(Cli, VerifyJsonOnInfiniteSpec) {
  auto j = run_json({"verify", "--spec", sample("z.json"), "--json"});
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 12u);
}

TEST(Cli, Table) {
  auto j = run_json({"table", "--spec", sample("s3.json"), "--metric", "word"});
  EXPECT_EQ(j["metric"], "word");
  EXPECT_EQ(j["vertices"].size(), 6u);
  EXPECT_EQ(j["vertices"][0], "e");
  EXPECT_EQ(j["distances"][0][0], 0);
  auto z = run_json({"table", "--spec", sample("z3.json"), "--truncate", "1"});
  EXPECT_EQ(z["vertices"].size(), 7u);
}

TEST(Cli, Diameter) {
  EXPECT_EQ(run({"diameter", "--spec", sample("s3.json")}).out, "2\n");
  EXPECT_EQ(run({"diameter", "--spec", sample("z.json"), "--metric", "word"}).out, "20\n");
  EXPECT_EQ(run({"diameter", "--spec", sample("z.json")}).out, "1\n");
}

TEST(Cli, GraphFormats) {
  auto dot = run({"graph", "--spec", sample("z4.json")});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph cayley {", 0), 0u);
  auto json = run_json({"graph", "--spec", sample("z4.json"), "--format", "json"});
  EXPECT_EQ(json["arcs"].size(), 4u);
  auto parsed = cardmetric::parse_digraph_json(json);
  EXPECT_EQ(parsed.size(), 4u);
  auto truncated = run_json({"graph", "--spec", sample("z3.json"), "--format", "json", "--truncate", "1"});
  EXPECT_EQ(truncated["vertices"].size(), 7u);
  EXPECT_EQ(truncated["truncation"]["radius"], 1);
}

TEST(Cli, Isometries) {
  auto caut = run_json({"isometries", "--spec", sample("s3.json"), "--class", "caut"});
  EXPECT_EQ(caut["count"], 6);
  auto paut = run_json({"isometries", "--spec", sample("q8.json"), "--class", "paut"});
  EXPECT_EQ(paut["count"], 16);
  auto brute = run_json({"isometries", "--spec", sample("z4.json"), "--class", "bruteforce", "--metric", "word"});
  EXPECT_EQ(brute["count"], 8);
}

TEST(Cli, Compare) {
  auto j = run_json({"compare", "--spec", sample("z.json"), "--K", "2", "--c", "3"});
  EXPECT_EQ(j["from_metric"], "word");
  EXPECT_FALSE(j["holds"].get<bool>());
  auto small = run_json({"compare", "--spec", sample("z.json"), "--truncate", "4", "--K", "2", "--c", "3"});
  EXPECT_TRUE(small["holds"].get<bool>());
  auto seeded = run_json({"compare", "--spec", sample("s3.json"), "--map", "seeded:7", "--K", "3/2", "--c", "0"});
  EXPECT_EQ(seeded["map"], "seeded:7");
}

TEST(Cli, Growth) {
  auto r = run({"growth", "--spec", sample("z.json"), "--metric", "word", "--radii", "1,2,3"});
  EXPECT_EQ(r.out, "1 2\n2 4\n3 6\n");
  EXPECT_EQ(run({"growth", "--spec", sample("z3.json"), "--radii", "1,2"}).out, "1 2\n2 3\n");
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--spec", sample("s3_t.json")},
           {"graph", "--spec", sample("q8.json"), "--format", "json"},
           {"compare", "--spec", sample("s3.json"), "--map", "seeded:3"},
           {"verify", "--spec", sample("z4.json"), "--json"},
       }) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"norm", "--spec", sample("s3.json")}).code, 2);
  EXPECT_EQ(run({"norm", "--spec", sample("missing.json"), "--element", "e"}).code, 2);
  EXPECT_EQ(run({"norm", "--spec", sample("s3.json"), "--element", "e", "--metric", "taxicab"}).code, 2);
  EXPECT_EQ(run({"graph", "--spec", sample("s3.json"), "--format", "png"}).code, 2);
  EXPECT_EQ(run({"isometries", "--spec", sample("s3.json"), "--class", "all"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("norm"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
  auto bad = run({"norm", "--spec", sample("z2_index4.json"), "--element", "[1,0]"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("lattice index 4"), std::string::npos);
  EXPECT_EQ(run({"norm", "--spec", sample("s3.json"), "--element", "(1 2)(2 3)"}).code, 1);
  EXPECT_EQ(run({"norm", "--spec", sample("s3.json"), "--element", "(1 4)"}).code, 1);
  EXPECT_EQ(run({"table", "--spec", sample("z3.json")}).code, 1);
  EXPECT_EQ(run({"growth", "--spec", sample("z.json"), "--radii", "3,2"}).code, 1);
  EXPECT_EQ(run({"compare", "--spec", sample("s3.json"), "--K", "0"}).code, 1);
  EXPECT_EQ(run({"compare", "--spec", sample("s3.json"), "--map", "random"}).code, 1);
  EXPECT_EQ(run({"isometries", "--spec", sample("q8.json"), "--class", "caut", "--bound", "4"}).code, 1);
  EXPECT_EQ(run({"dist", "--spec", sample("z.json"), "--from", "0", "--to", "50", "--metric", "word",
                 "--radius-cap", "10"})
                .code,
            1);
}

TEST(Cli, BoundFromEnvironment) {
  ::setenv("CARDMETRIC_BOUND", "4", 1);
  EXPECT_EQ(run({"isometries", "--spec", sample("s3.json"), "--class", "caut"}).code, 1);
  EXPECT_EQ(run({"isometries", "--spec", sample("s3.json"), "--class", "caut", "--bound", "6"}).code, 0);
  ::setenv("CARDMETRIC_BOUND", "lots", 1);
  EXPECT_EQ(run({"isometries", "--spec", sample("s3.json"), "--class", "caut"}).code, 1);
  ::unsetenv("CARDMETRIC_BOUND");
  EXPECT_EQ(run({"isometries", "--spec", sample("s3.json"), "--class", "caut"}).code, 0);
}

}  // namespace
