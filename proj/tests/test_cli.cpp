#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mmlab/cli.hpp"
#include "test_support.hpp"

using namespace mmlab;

namespace {

struct Result {
  int code;
  Json out;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mmlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  Json j;
  if (!out.str().empty() && out.str()[0] == '{') j = Json::parse(out.str());
  return {code, j};
}

std::string data(const std::string& f) { return std::string(MMLAB_DATA_DIR) + "/" + f; }
std::string golden(const std::string& f) { return std::string(MMLAB_GOLDEN_DIR) + "/" + f + ".mm.json"; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, Q1OfH33) {
  const auto r = run_cli({"poly", "q1", "--mm", golden("H33")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["coeffs"], Json::array({"18", "9"}));
}

TEST(Cli, GraphPolynomials) {
  EXPECT_EQ(run_cli({"poly", "interlace", "--graph", data("k2.graph")}).out["coeffs"], Json::array({"0", "2"}));
  EXPECT_EQ(run_cli({"poly", "global", "--graph", data("k1.graph")}).out["coeffs"], Json::array({"0", "1"}));
  EXPECT_EQ(run_cli({"poly", "bracket", "--graph", data("k1.graph")}).code, 0);
}

TEST(Cli, OrtOfK2) {
  const auto r = run_cli({"--threads", "2", "ort", "--graph", data("k2.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["count"], 3);
}

TEST(Cli, TutteValues) {
  EXPECT_EQ(run_cli({"tutte", "--matroid", data("u24.gfmat"), "--x", "-1", "--y", "-1"}).out["value"], "-2");
  EXPECT_EQ(run_cli({"poly", "tutte-diagonal", "--matroid", data("fano.gfmat"), "--x", "3"}).out["value"],
            run_cli({"tutte", "--matroid", data("fano.gfmat"), "--x", "3", "--y", "3"}).out["value"]);
}

TEST(Cli, TightAndExtend) {
  const auto s1 = run_cli({"tight", "--mm", golden("S1")});
  EXPECT_EQ(s1.out["multimatroid"], true);
  EXPECT_EQ(s1.out["tight"], false);
  EXPECT_TRUE(s1.out.contains("witness"));
  EXPECT_EQ(run_cli({"extend", "--mm", golden("S4")}).out["extendable"], false);
  EXPECT_EQ(run_cli({"extend", "--mm", golden("ZU24")}).out["extendable"], true);
}

TEST(Cli, MinorsAndClassify) {
  EXPECT_EQ(run_cli({"minors", "--mm", golden("ZU24_3"), "--pattern", "H33"}).out["found"], true);
  EXPECT_EQ(run_cli({"minors", "--mm", golden("S1"), "--pattern-mm", golden("S4")}).out["found"], false);
  EXPECT_EQ(run_cli({"classify", "--mm", golden("H33")}).out["binary"], false);
  EXPECT_EQ(run_cli({"classify", "--graph", data("k3.graph")}).out["binary"], true);
}

TEST(Cli, EvalsPass) {
  const auto r = run_cli({"evals", "--graph", data("p4.graph"), "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["pass"], true);
  const auto t = run_cli({"evals", "--graph", data("k2.graph"), "--transversal", "1a,2a"});
  EXPECT_EQ(t.code, 0);
}

TEST(Cli, CatalogDumpRoundTrips) {
  const auto r = run_cli({"catalog", "dump", "S5"});
  const auto z = parse_multimatroid_json(r.out);
  EXPECT_TRUE(same_structure(z, fixture_s5()));
  EXPECT_EQ(run_cli({"catalog", "list"}).out["fixtures"].size(), fixtures().size());
}

TEST(Cli, TransitionWeights) {
  const auto w = temp_file("w.json", R"({"1a": "1/2", "1b": 2, "2a": 1, "2b": 1, "3a": 1, "3b": 1})");
  const auto r = run_cli({"poly", "transition", "--mm", golden("S3"), "--weights", w});
  EXPECT_EQ(r.code, 0);
  WeightAssignment expect = uniform_weights(6, 1);
  expect[0] = Rational(1, 2);
  expect[1] = Rational(2);
  EXPECT_EQ(r.out, polynomial_json(transition_poly(fixture_s3(), expect)));
  const auto partial = temp_file("p.json", R"({"1a": 1})");
  const auto bad = run_cli({"poly", "transition", "--mm", golden("S3"), "--weights", partial});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.out["error"]["code"], "IncompleteWeights");
  const auto flt = temp_file("f.json", R"({"1a": 0.5})");
  EXPECT_EQ(run_cli({"poly", "transition", "--mm", golden("S3"), "--weights", flt}).code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"nonsense"}).code, 1);
  EXPECT_EQ(run_cli({"poly", "q1"}).code, 1);  // no input
  EXPECT_EQ(run_cli({"poly", "q1", "--mm", data("k2.graph")}).code, 1);
  const auto r = run_cli({"evals", "--mm", golden("H33")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out["error"]["code"], "NotBinaryTight3");
  EXPECT_EQ(run_cli({"tutte", "--matroid", data("u24.gfmat"), "--x", "0.5", "--y", "1"}).code, 1);
}
