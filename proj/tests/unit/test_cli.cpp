#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "builders.hpp"
#include "fcd/cli/app.hpp"
#include "fcd/cli/dispatch.hpp"
#include "fcd/cli/format.hpp"
#include "fcd/generators.hpp"
#include "reference.hpp"

using namespace fcd;
using namespace fcd::cli;
using namespace fcd::testing;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fcd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kP4 =
    "# a path\n"
    "p fcd 4 3 2 2 0\n"
    "c 0 0\nc 1 1\nc 2 0\nc 3 1\n"
    "e 0 1\ne 1 2\ne 2 3\n";

std::string k6_text(int k) {
  std::ostringstream os;
  os << "p fcd 6 15 2 " << k << " 0\n";
  for (int v = 0; v < 6; ++v) os << "c " << v << ' ' << (v < 3 ? 0 : 1) << '\n';
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

int error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const FormatError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(FormatTest, ParsesPath) {
  const auto p = parse_instance(kP4);
  EXPECT_EQ(p.instance.graph.n(), 4);
  EXPECT_EQ(p.instance.graph.num_edges(), 3);
  EXPECT_EQ(p.instance.k, 2);
  EXPECT_EQ(p.instance.ell, 0);
  EXPECT_FALSE(p.td.has_value());
  EXPECT_EQ(write_instance(p.instance), std::string(kP4).substr(std::string("# a path\n").size()));
}

TEST(FormatTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("p fcd 3 2 1 1 0\nc 0 0\nc 1 0\nc 2 0\ne 0 1\ne 0 1\n"), 6);
  EXPECT_EQ(error_line("p fcd 2 0 2 1 0\nc 0 5\nc 1 0\n"), 2);
  EXPECT_EQ(error_line("p fcd 2 1 2 1 0\nc 0 0\nc 1 0\ne 1 0\n"), 4);
  EXPECT_EQ(error_line("p fcd 2 0 2 1 0\nc 0 0\nx 1 0\n"), 3);
  EXPECT_EQ(error_line("p fcd 2 0 2 1 0\nc 0 0\nc 1 zero\n"), 3);
  EXPECT_EQ(error_line("p fcd 3 0 2 1 0\nc 0 0\nc 1 0\n"), 0);
  EXPECT_EQ(error_line("p fcd 2 0 2 3 0\n"), 1);
  EXPECT_EQ(error_line(""), 0);
}

TEST(FormatTest, CanonicalRoundTrip) {
  const std::string messy =
      "p fcd 3 2 2 1 1\n# comment\n\ne 1 2\nc 2 1\nc 0 0\ne 0 1\nc 1 1\n";
  const auto once = write_instance(parse_instance(messy).instance);
  EXPECT_EQ(once, "p fcd 3 2 2 1 1\nc 0 0\nc 1 1\nc 2 1\ne 0 1\ne 1 2\n");
  EXPECT_EQ(write_instance(parse_instance(once).instance), once);
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform_int(rng, 3, 15);
    const auto inst = gen_random_instance(GeneratorClass::general(0.3), n, 3, uniform_int(rng, 1, n),
                                          uniform_int(rng, 0, 3), rng());
    const auto text = write_instance(inst);
    const auto back = parse_instance(text);
    EXPECT_EQ(back.instance.graph, inst.graph);
    EXPECT_EQ(write_instance(back.instance), text);
  }
}

TEST(FormatTest, TreeDecompositionBlock) {
  const std::string text =
      "p fcd 3 3 1 1 3\nc 0 0\nc 1 0\nc 2 0\ne 0 1\ne 0 2\ne 1 2\n"
      "td 2 2\nb 0 -1 0 1 2\nb 1 0 2 1\n";
  const auto p = parse_instance(text);
  ASSERT_TRUE(p.td.has_value());
  EXPECT_EQ(p.td->width(), 2);
  const auto out = write_instance(p.instance, &*p.td);
  const auto again = parse_instance(out);
  EXPECT_EQ(write_instance(again.instance, &*again.td), out);
  EXPECT_THROW(parse_instance("p fcd 3 3 1 1 3\nc 0 0\nc 1 0\nc 2 0\ne 0 1\ne 0 2\ne 1 2\n"
                              "td 1 2\nb 0 -1 0 1\nb 1 0 1 2\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_instance("p fcd 3 3 1 1 3\nc 0 0\nc 1 0\nc 2 0\ne 0 1\ne 0 2\ne 1 2\n"
                              "td 2 1\nb 0 -1 0 1 2\nb 1 0 1\n"),
               FormatError);
}

TEST(FormatTest, SolutionRoundTrip) {
  const Districting d({0, 1, 1, 0}, 2);
  const auto text = write_solution(d);
  EXPECT_EQ(text, "s fcd 2\nd 0 0 3\nd 1 1 2\n");
  EXPECT_EQ(parse_solution(text, 4), d);
  EXPECT_THROW(parse_solution("s fcd 2\nd 0 0 1\nd 1 1 2 3\n", 4), FormatError);
  EXPECT_THROW(parse_solution("s fcd 2\nd 0 0 1 2\n", 4), FormatError);
  EXPECT_NO_THROW(parse_solution("s fcd 2\nd 0 0 1 2 3\nd 1\n", 4));
}

TEST(FormatTest, ReductionBlocks) {
  const auto grid = parse_grid_tiling(
      "grid 1 2 3\ntile 1 1 1 1\ntile 1 1 1 2\ntile 1 1 2 1\nselect 1 1 1 1\n");
  EXPECT_EQ(grid.instance.cells.size(), 1u);
  ASSERT_TRUE(grid.selection);
  const auto nae = parse_nae("nae 3 1\nclause 1 2 -3\nassign 1 0 0\n");
  ASSERT_TRUE(nae.assignment);
  EXPECT_TRUE(nae.instance.is_solution(*nae.assignment));
  EXPECT_THROW(parse_nae("nae 3 1\nclause 1 1 -3\n"), FormatError);
  const auto pbcp = parse_pbcp("pbcp 4 3 1 2\ne 0 1\ne 1 2\ne 2 3\n");
  EXPECT_EQ(pbcp.edges.size(), 3u);
  EXPECT_THROW(parse_pbcp("pbcp 4 3 1 2\ne 0 1\n"), FormatError);
}

TEST(DispatchTest, LadderExamples) {
  const auto p9 = gen_random_instance({GeneratorClass::kPath}, 9, 2, 2, 0, 1);
  EXPECT_EQ(dispatch_auto(p9), Algorithm::kPath);
  const auto tree = gen_random_instance({GeneratorClass::kTree}, 10, 2, 2, 0, 1);
  EXPECT_EQ(dispatch_auto(tree), Algorithm::kTreewidth);
  EXPECT_EQ(dispatch_auto(gen_random_instance({GeneratorClass::kCycle}, 9, 2, 2, 0, 1)), Algorithm::kCycle);
  EXPECT_EQ(dispatch_auto(gen_random_instance({GeneratorClass::kStar}, 9, 2, 2, 0, 1)), Algorithm::kStar);

  // dense graph on 40 vertices with a vertex cover of 20 and 10 colors
  std::vector<Edge> edges;
  for (int u = 0; u < 20; ++u)
    for (int v = u + 1; v < 40; ++v) edges.emplace_back(u, v);
  std::vector<Color> colors(40);
  for (int v = 0; v < 40; ++v) colors[v] = v % 10;
  const Instance dense(ColoredGraph(10, colors, edges), 4, 1);
  EXPECT_FALSE(dispatch_auto(dense).has_value());
  WorkBudget budget;
  EXPECT_THROW(run_algorithm(Algorithm::kAuto, dense, std::nullopt, budget), BudgetExceeded);
}

TEST(DispatchTest, NamesRoundTrip) {
  for (const char* name : {"auto", "path", "cycle", "star", "caterpillar", "mln", "treewidth", "fen-k", "vc",
                           "vc-colors", "deg2", "brute"})
    EXPECT_EQ(to_string(parse_algorithm(name)), name);
  EXPECT_THROW(parse_algorithm("magic"), std::invalid_argument);
}

TEST(DispatchTest, AutoMatchesBruteOnRandomInstances) {
  std::mt19937_64 rng(157);
  const std::vector<GeneratorClass> classes{
      {GeneratorClass::kPath},      {GeneratorClass::kCycle}, {GeneratorClass::kStar},
      {GeneratorClass::kCaterpillar}, {GeneratorClass::kTree}, {GeneratorClass::kUnicyclic},
      GeneratorClass::bounded_vc(2), GeneratorClass::bounded_vc(4), GeneratorClass::general(0.2),
      GeneratorClass::general(0.5)};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& cls = classes[trial % classes.size()];
    const int n = uniform_int(rng, 7, 10);
    const auto inst = gen_random_instance(cls, n, uniform_int(rng, 1, 4), uniform_int(rng, 1, std::min(n, 4)),
                                          uniform_int(rng, 0, 2), rng());
    WorkBudget b1, b2;
    const auto a = run_algorithm(Algorithm::kAuto, inst, std::nullopt, b1);
    const auto b = run_algorithm(Algorithm::kBrute, inst, std::nullopt, b2);
    EXPECT_EQ(a.result.feasible, b.result.feasible) << to_string(cls) << " via " << to_string(a.algorithm);
    if (a.result.witness) EXPECT_TRUE(verify_districting(inst, *a.result.witness).valid());
  }
}

TEST_F(CliTest, SolveK6WithBrute) {
  const auto in = file("k6.fcd", k6_text(3));
  EXPECT_EQ(run({"solve", "--algo", "brute", in, "-o", path("k6.sol")}), 0);
  EXPECT_EQ(out_.str(), "YES\n");
  EXPECT_EQ(run({"verify", in, path("k6.sol")}), 0);
  EXPECT_EQ(out_.str(), "valid\n");
  const auto no = file("k6_4.fcd", k6_text(4));
  EXPECT_EQ(run({"solve", "--algo", "brute", no}), 1);
  EXPECT_EQ(out_.str(), "NO\n");
}

TEST_F(CliTest, VerifyReportsEmptyDistrict) {
  const auto in = file("p4.fcd", kP4);
  const auto sol = file("bad.sol", "s fcd 2\nd 0 0 1 2 3\nd 1\n");
  EXPECT_EQ(run({"verify", in, sol}), 1);
  EXPECT_NE(out_.str().find("empty"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"solve", "--frobnicate", "x"}), 2);
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"solve", path("missing.fcd")}), 2);
  const auto bad = file("bad.fcd", "p fcd 2 1 2 1 0\nc 0 0\nc 1 0\ne 0 1\ne 0 1\n");
  EXPECT_EQ(run({"solve", bad}), 2);
  EXPECT_NE(err_.str().find("line 5"), std::string::npos);
  const auto cyc = file("c4.fcd", "p fcd 4 4 2 2 0\nc 0 0\nc 1 1\nc 2 0\nc 3 1\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n");
  EXPECT_EQ(run({"solve", "--algo", "path", cyc}), 2);
  EXPECT_EQ(run({"solve", "--algo", "nope", cyc}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, BudgetExceededExitsThree) {
  const auto in = file("k6.fcd", k6_text(3));
  EXPECT_EQ(run({"solve", "--algo", "fen-k", "--budget", "5", in}), 3);
  EXPECT_EQ(run({"solve", "--algo", "mln", "--budget", "1", in}), 3);
  setenv("FCD_BUDGET", "1", 1);
  EXPECT_EQ(run({"solve", "--algo", "fen-k", in}), 3);
  setenv("FCD_BUDGET", "junk", 1);
  EXPECT_EQ(run({"solve", "--algo", "fen-k", in}), 2);
  unsetenv("FCD_BUDGET");
  EXPECT_EQ(run({"solve", "--algo", "fen-k", in}), 0);
}

TEST_F(CliTest, SolveAllAlgorithmsAndVerifyWitnesses) {
  std::mt19937_64 rng(163);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = gen_random_instance({GeneratorClass::kCaterpillar}, 8, 2, uniform_int(rng, 1, 4),
                                          uniform_int(rng, 0, 2), rng());
    const auto in = file("cat.fcd", write_instance(inst));
    const int expect = run({"solve", "--algo", "brute", in});
    for (const char* algo : {"auto", "caterpillar", "mln", "treewidth", "fen-k", "vc", "vc-colors", "deg2"}) {
      const auto sol = path(std::string("cat_") + algo + ".sol");
      fs::remove(sol);
      EXPECT_EQ(run({"solve", "--algo", algo, in, "-o", sol}), expect) << algo;
      if (fs::exists(sol)) EXPECT_EQ(run({"verify", in, sol}), 0) << algo;
    }
  }
}

TEST_F(CliTest, TreeDecompositionFromFile) {
  const std::string text =
      "p fcd 4 4 2 2 0\nc 0 0\nc 1 1\nc 2 0\nc 3 1\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n"
      "td 2 2\nb 0 -1 0 1 2\nb 1 0 0 2 3\n";
  const auto in = file("c4td.fcd", text);
  EXPECT_EQ(run({"solve", "--algo", "treewidth", in}), 0);
  EXPECT_EQ(run({"solve", in}), 0);
  EXPECT_NE(err_.str().find("cycle"), std::string::npos);
  EXPECT_EQ(run({"classify", in}), 0);
  EXPECT_NE(out_.str().find("class: cycle"), std::string::npos);
  EXPECT_NE(out_.str().find("td_width: 2"), std::string::npos);
}

TEST_F(CliTest, GenerateIsDeterministic) {
  EXPECT_EQ(run({"generate", "--class", "tree", "--n", "12", "--colors", "3", "--k", "3", "--ell", "1",
                 "--seed", "9", "-o", path("a.fcd")}),
            0);
  EXPECT_EQ(run({"generate", "--class", "tree", "--n", "12", "--colors", "3", "--k", "3", "--ell", "1",
                 "--seed", "9", "-o", path("b.fcd")}),
            0);
  EXPECT_EQ(slurp(path("a.fcd")), slurp(path("b.fcd")));
  EXPECT_EQ(run({"generate", "--class", "cycle", "--n", "2"}), 2);
  EXPECT_EQ(run({"generate"}), 2);
}

TEST_F(CliTest, GenerateReductionsWithWitness) {
  const auto nae = file("nae.txt", "nae 3 1\nclause 1 2 -3\nassign 1 0 0\n");
  ASSERT_EQ(run({"generate", "--reduction", "nae", "--params", nae, "-o", path("nae.fcd"), "--witness-out",
                 path("nae.sol")}),
            0);
  EXPECT_EQ(run({"verify", path("nae.fcd"), path("nae.sol")}), 0);
  const auto grid = file("grid.txt",
                         "grid 2 2 3\n"
                         "tile 1 1 1 1\ntile 1 1 1 2\ntile 1 1 2 1\n"
                         "tile 1 2 1 1\ntile 1 2 1 2\ntile 1 2 2 1\n"
                         "tile 2 1 1 1\ntile 2 1 1 2\ntile 2 1 2 1\n"
                         "tile 2 2 1 1\ntile 2 2 1 2\ntile 2 2 2 1\n"
                         "select 1 1 1 1\nselect 1 2 1 1\nselect 2 1 1 1\nselect 2 2 1 1\n");
  ASSERT_EQ(run({"generate", "--reduction", "grid", "--params", grid, "-o", path("grid.fcd"), "--witness-out",
                 path("grid.sol")}),
            0);
  EXPECT_EQ(run({"verify", path("grid.fcd"), path("grid.sol")}), 0);
  const auto pbcp = file("pbcp.txt", "pbcp 4 3 1 2\ne 0 1\ne 1 2\ne 2 3\n");
  ASSERT_EQ(run({"generate", "--reduction", "pbcp", "--params", pbcp, "-o", path("pbcp.fcd")}), 0);
  EXPECT_EQ(run({"solve", "--algo", "brute", path("pbcp.fcd")}), 0);
  EXPECT_EQ(run({"generate", "--reduction", "sudoku", "--params", pbcp}), 2);
}

TEST_F(CliTest, BenchCsvCoversEveryPair) {
  const auto p4 = file("p4.fcd", kP4);
  ASSERT_EQ(run({"bench", p4, "--class", "caterpillar", "--n", "8", "--count", "3", "--seed", "5", "--algos",
                 "brute,caterpillar,vc", "--no-timing", "-o", path("bench.csv")}),
            0);
  std::istringstream csv(slurp(path("bench.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "instance_id,algorithm,decision,wall_ms,work");
  std::set<std::pair<std::string, std::string>> pairs;
  int rows = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    ASSERT_EQ(fields.size(), 5u) << line;
    EXPECT_TRUE(fields[2] == "YES" || fields[2] == "NO" || fields[2] == "NA" || fields[2] == "UNDECIDED");
    EXPECT_EQ(fields[3], "NA");
    pairs.insert({fields[0], fields[1]});
    ++rows;
  }
  EXPECT_EQ(rows, 12);
  EXPECT_EQ(pairs.size(), 12u);
  ASSERT_EQ(run({"bench", "--class", "caterpillar", "--n", "8", "--count", "3", "--seed", "5", "--algos",
                 "brute,caterpillar,vc", "--no-timing", "--threads", "3"}),
            0);
  std::string threaded = out_.str();
  ASSERT_EQ(run({"bench", "--class", "caterpillar", "--n", "8", "--count", "3", "--seed", "5", "--algos",
                 "brute,caterpillar,vc", "--no-timing"}),
            0);
  EXPECT_EQ(threaded, out_.str());
}

TEST(CliBinaryTest, ExecutableRuns) {
  const std::string cmd = std::string(FCD_EXE) + " --help > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
}
