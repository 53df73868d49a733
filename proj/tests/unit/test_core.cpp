#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "builders.hpp"
#include "fcd/graph.hpp"
#include "fcd/oracle.hpp"
#include "reference.hpp"

using namespace fcd;
using namespace fcd::testing;

TEST(ColorVectorTest, CountsSubset) {
  const auto g = graph({0, 1, 0, 1}, path_edges(4));
  const std::vector<Vertex> s{0, 1};
  EXPECT_EQ(color_vector(g, s), ColorVector(std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(color_vector(g, std::vector<Vertex>{}), ColorVector(2));
  const auto mono = graph({0, 0, 0}, path_edges(3));
  EXPECT_EQ(color_vector(mono, std::vector<Vertex>{0, 1, 2}), ColorVector(std::vector<std::int64_t>{3}));
}

TEST(ColorVectorTest, OutOfRangeVertexThrows) {
  const auto g = graph({0, 1}, path_edges(2));
  EXPECT_THROW(color_vector(g, std::vector<Vertex>{2}), std::out_of_range);
}

TEST(MovTest, Definition) {
  EXPECT_EQ(mov(ColorVector(std::vector<std::int64_t>{3, 3})), 0);
  EXPECT_EQ(mov(ColorVector(std::vector<std::int64_t>{5, 2, 2})), 3);
  EXPECT_EQ(mov(ColorVector(std::vector<std::int64_t>{4})), 4);
  EXPECT_EQ(mov(ColorVector(std::vector<std::int64_t>{0, 1})), 1);
  EXPECT_THROW(mov(ColorVector()), std::invalid_argument);
}

TEST(MovTest, ZeroIffMaxRepeatedAndPermutationInvariant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int len = 2 + static_cast<int>(rng() % 5);
    std::vector<std::int64_t> v(len);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 5);
    const auto top = *std::max_element(v.begin(), v.end());
    const bool repeated = std::count(v.begin(), v.end(), top) >= 2;
    EXPECT_EQ(mov(ColorVector(v)) == 0, repeated);
    EXPECT_EQ(mov(ColorVector(v)), ref_mov(v));
    auto w = v;
    std::shuffle(w.begin(), w.end(), rng);
    EXPECT_EQ(mov(ColorVector(w)), mov(ColorVector(v)));
  }
}

TEST(ColorVectorTest, AdditiveOverDisjointSets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8;
    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(rng() % 3);
    const auto g = graph(colors, {}, 3);
    std::vector<Vertex> a, b, both;
    for (Vertex v = 0; v < n; ++v) {
      const auto r = rng() % 3;
      if (r == 0) a.push_back(v);
      if (r == 1) b.push_back(v);
      if (r != 2) both.push_back(v);
    }
    EXPECT_EQ(color_vector(g, a) + color_vector(g, b), color_vector(g, both));
  }
}

TEST(GraphTest, RejectsMalformedInput) {
  EXPECT_THROW(graph({0, 0}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(graph({0, 0}, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(graph({0, 2}, {}, 2), std::invalid_argument);
  EXPECT_THROW(graph({0, 0}, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Instance(graph({0, 0}, {}), 3, 0), std::invalid_argument);
  EXPECT_THROW(Instance(graph({0, 0}, {}), 1, -1), std::invalid_argument);
}

TEST(GraphTest, AdjacencySortedAndSymmetric) {
  const auto g = graph({0, 0, 0, 0}, {{2, 3}, {0, 3}, {1, 3}});
  const auto nb = g.neighbors(3);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
}

TEST(VerifyTest, K6PairsDistricting) {
  const auto inst = instance({0, 0, 0, 1, 1, 1}, complete_edges(6), 3, 0);
  const auto d = Districting::from_sets({{0, 3}, {1, 4}, {2, 5}}, 6);
  EXPECT_TRUE(verify_districting(inst, d).valid());
}

TEST(VerifyTest, ReportsFirstViolation) {
  const auto p4 = instance({0, 1, 0, 1}, path_edges(4), 2, 0);
  auto v = verify_districting(p4, Districting::from_sets({{0, 2}, {1, 3}}, 4));
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violation->kind, ViolationKind::kDisconnected);
  EXPECT_EQ(v.violation->district, 0);

  const auto p2 = instance({0, 0}, path_edges(2), 2, 0);
  v = verify_districting(p2, Districting::from_sets({{0}, {1}}, 2));
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violation->kind, ViolationKind::kUnfair);
  EXPECT_EQ(v.violation->mov, 1);

  v = verify_districting(p4, Districting({0, 0, 0, 0}, 2));
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violation->kind, ViolationKind::kEmpty);
  EXPECT_EQ(v.violation->district, 1);
  EXPECT_NE(v.describe().find("empty"), std::string::npos);
}

TEST(VerifyTest, SingletonWithTwoColorsHasMovOne) {
  const auto inst = instance({0, 1}, path_edges(2), 2, 0, 2);
  EXPECT_FALSE(verify_districting(inst, Districting({0, 1}, 2)).valid());
  const auto loose = instance({0, 1}, path_edges(2), 2, 1, 2);
  EXPECT_TRUE(verify_districting(loose, Districting({0, 1}, 2)).valid());
}

TEST(VerifyTest, DimensionMismatchThrows) {
  const auto inst = instance({0, 1, 0}, path_edges(3), 2, 0);
  EXPECT_THROW(verify_districting(inst, Districting({0, 1, 0}, 3)), std::invalid_argument);
  EXPECT_THROW(verify_districting(inst, Districting({0, 1}, 2)), std::invalid_argument);
}

TEST(VerifyTest, AgreesWithIndependentCheckerOnAllAssignments) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(rng() % 2);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const int k = 1 + static_cast<int>(rng() % 3);
    const Instance inst(graph(colors, edges, 2), k, static_cast<std::int64_t>(rng() % 2));
    std::vector<int> a(n, 0);
    for (;;) {
      const Verdict v = verify_districting(inst, Districting(a, k));
      const std::string ref = ref_check(inst, a);
      EXPECT_EQ(v.valid(), ref.empty());
      if (!v.valid()) EXPECT_EQ(to_string(v.violation->kind), ref);
      int i = 0;
      while (i < n && a[i] == k - 1) a[i++] = 0;
      if (i == n) break;
      ++a[i];
    }
  }
}

TEST(VerifyTest, AcceptsExactlyTheOracleListOnSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(rng() % 2);
    std::vector<Edge> edges = path_edges(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 2; v < n; ++v)
        if (rng() % 4 == 0) edges.emplace_back(u, v);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 4));
    const Instance inst(graph(colors, edges, 2), k, static_cast<std::int64_t>(rng() % 2));
    std::vector<std::vector<int>> listed;
    for (const auto& d : connected_partitions(inst.graph, k))
      if (verify_districting(inst, d).valid())
        listed.emplace_back(d.assignment().begin(), d.assignment().end());
    std::sort(listed.begin(), listed.end());
    auto ref = ref_solve(inst, true).witnesses;
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(listed, ref);
  }
}

TEST(ComponentsTest, Examples) {
  const auto g = graph({0, 0, 0}, path_edges(3));
  const auto comps = connected_components(g, std::vector<Vertex>{0, 2});
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], std::vector<Vertex>{0});
  EXPECT_EQ(comps[1], std::vector<Vertex>{2});
  EXPECT_EQ(connected_components(g).size(), 1u);
  EXPECT_TRUE(connected_components(g, std::vector<Vertex>{}).empty());
}

TEST(DistrictingTest, CanonicalRelabelsByFirstOccurrence) {
  const Districting d({2, 2, 0, 1}, 3);
  EXPECT_EQ(d.canonical(), Districting({0, 0, 1, 2}, 3));
  EXPECT_THROW(Districting::from_sets({{0}, {0, 1}}, 2), std::invalid_argument);
  EXPECT_THROW(Districting::from_sets({{0}}, 2), std::invalid_argument);
}
