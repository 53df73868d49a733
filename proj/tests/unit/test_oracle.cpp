#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "builders.hpp"
#include "fcd/generators.hpp"
#include "fcd/oracle.hpp"
#include "reference.hpp"

using namespace fcd;
using namespace fcd::testing;

TEST(OracleTest, EnumerationExamples) {
  const auto p3 = graph({0, 0, 0}, path_edges(3));
  const auto two = connected_partitions(p3, 2);
  ASSERT_EQ(two.size(), 2u);
  std::vector<std::vector<std::vector<Vertex>>> sets;
  for (const auto& d : two) sets.push_back(d.districts());
  std::sort(sets.begin(), sets.end());
  EXPECT_EQ(sets[0], (std::vector<std::vector<Vertex>>{{0}, {1, 2}}));
  EXPECT_EQ(sets[1], (std::vector<std::vector<Vertex>>{{0, 1}, {2}}));
  EXPECT_EQ(connected_partitions(graph({0, 0, 0}, complete_edges(3)), 3).size(), 1u);
  EXPECT_EQ(connected_partitions(p3, 3).size(), 1u);
}

TEST(OracleTest, K6TwoColors) {
  for (int k = 1; k <= 6; ++k) {
    const auto inst = instance({0, 0, 0, 1, 1, 1}, complete_edges(6), k, 0);
    const auto r = brute_force_solve(inst);
    EXPECT_EQ(r.feasible, k <= 3) << "k=" << k;
    if (r.feasible) EXPECT_TRUE(verify_districting(inst, *r.witness).valid());
  }
}

TEST(OracleTest, SmallExamples) {
  EXPECT_TRUE(brute_force_solve(instance({0, 1, 0, 1}, path_edges(4), 2, 0)).feasible);
  EXPECT_FALSE(brute_force_solve(instance({0, 0, 0}, path_edges(3), 2, 0)).feasible);
}

TEST(OracleTest, CapThrows) {
  const auto inst = instance(std::vector<Color>(13, 0), path_edges(13), 2, 0);
  EXPECT_THROW(brute_force_solve(inst), BudgetExceeded);
  EXPECT_NO_THROW(brute_force_solve(inst, 13));
}

TEST(OracleTest, PartitionCountsMatchFilteredSetPartitions) {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 1, 8);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const auto g = graph(std::vector<Color>(n, 0), edges, 1);
    for (int k = 1; k <= n; ++k) {
      const auto parts = connected_partitions(g, k);
      // a huge ell makes every partition fair, so the reference keeps exactly
      // the connected ones
      const auto ref = ref_solve(Instance(g, k, 1000), true).witnesses;
      ASSERT_EQ(parts.size(), ref.size());
      std::vector<std::vector<int>> got;
      for (const auto& d : parts) {
        EXPECT_EQ(d, d.canonical());
        got.emplace_back(d.assignment().begin(), d.assignment().end());
      }
      std::sort(got.begin(), got.end());
      auto want = ref;
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);
    }
  }
}

TEST(OracleTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 3, 8);
    const auto inst = gen_random_instance(GeneratorClass::general(0.3), n, uniform_int(rng, 1, 3),
                                          uniform_int(rng, 1, std::min(n, 4)), uniform_int(rng, 0, 2), rng());
    const bool base = brute_force_solve(inst).feasible;
    for (int p = 0; p < 50; ++p) {
      const auto perm = random_permutation(n, rng);
      std::vector<Color> colors(n);
      for (Vertex v = 0; v < n; ++v) colors[perm[v]] = inst.graph.color(v);
      const Instance moved(ColoredGraph(inst.graph.num_colors(), colors, relabel_edges(inst.graph.edges(), perm)),
                           inst.k, inst.ell);
      EXPECT_EQ(brute_force_solve(moved).feasible, base);
    }
  }
}
