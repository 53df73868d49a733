#include <gtest/gtest.h>

#include <random>

#include "builders.hpp"
#include "fcd/classify.hpp"
#include "fcd/generators.hpp"
#include "fcd/solvers_poly.hpp"
#include "reference.hpp"

using namespace fcd;
using namespace fcd::testing;

namespace {

std::vector<Vertex> iota_order(int n) {
  std::vector<Vertex> o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

ColorVector cv(std::vector<std::int64_t> v) { return ColorVector(std::move(v)); }

void expect_valid_witness(const Instance& inst, const SolveResult& r) {
  if (!r.feasible) return;
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(ref_check(inst, std::vector<int>(r.witness->assignment().begin(), r.witness->assignment().end())), "");
}

Instance random_of(std::mt19937_64& rng, GeneratorClass cls, int n_lo, int n_hi) {
  const int n = uniform_int(rng, n_lo, n_hi);
  const int colors = uniform_int(rng, 1, 3);
  const int k = uniform_int(rng, 1, std::min(n, 4));
  const int ell = uniform_int(rng, 0, 2);
  return gen_random_instance(cls, n, colors, k, ell, rng());
}

}  // namespace

TEST(PathTest, Examples) {
  auto inst = instance({0, 1, 0, 1}, path_edges(4), 2, 0);
  auto r = solve_path(inst, iota_order(4));
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.witness->districts(), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));

  inst = instance({0, 0, 0}, path_edges(3), 2, 0);
  EXPECT_FALSE(solve_path(inst, iota_order(3)).feasible);

  inst = instance({0, 1, 1, 2, 0}, path_edges(5), 1, 5);
  EXPECT_TRUE(solve_path(inst, iota_order(5)).feasible);

  EXPECT_THROW(solve_path(instance({0, 0, 0}, {{0, 1}, {0, 2}}, 1, 0), iota_order(3)), std::invalid_argument);
}

TEST(PathTest, ReversalInvariantAndOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_of(rng, {GeneratorClass::kPath}, 2, 10);
    const auto order = *classify_graph(inst.graph).spine;
    std::vector<Vertex> rev(order.rbegin(), order.rend());
    const auto a = solve_path(inst, order), b = solve_path(inst, rev);
    EXPECT_EQ(a.feasible, b.feasible);
    EXPECT_EQ(a.feasible, ref_solve(inst).feasible);
    expect_valid_witness(inst, a);
  }
}

TEST(CycleTest, Examples) {
  auto inst = instance({0, 1, 0, 1}, cycle_edges(4), 2, 0);
  auto r = solve_cycle(inst, iota_order(4));
  EXPECT_TRUE(r.feasible);
  expect_valid_witness(inst, r);
  EXPECT_TRUE(solve_cycle(instance({0, 1, 2}, cycle_edges(3), 1, 0), iota_order(3)).feasible);
  EXPECT_FALSE(solve_cycle(instance({0, 0, 1}, cycle_edges(3), 3, 0), iota_order(3)).feasible);
  EXPECT_THROW(solve_cycle(instance({0, 0, 1}, path_edges(3), 1, 0), iota_order(3)), std::invalid_argument);
}

TEST(CycleTest, Oracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_of(rng, {GeneratorClass::kCycle}, 3, 10);
    const auto r = solve_cycle(inst, *classify_graph(inst.graph).spine);
    EXPECT_EQ(r.feasible, ref_solve(inst).feasible);
    expect_valid_witness(inst, r);
  }
}

TEST(StarIntervalTest, Examples) {
  auto s = star_interval(cv({1, 0}), cv({3, 3}), 1);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.lo, 1);
  EXPECT_EQ(s.hi, 7);
  EXPECT_FALSE(star_interval(cv({1, 0}), cv({3, 3}), 0).feasible);
  s = star_interval(cv({2, 0}), cv({0, 0}), 2);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.lo, 1);
  EXPECT_EQ(s.hi, 1);
}

TEST(StarIntervalTest, SingleColorBoundFromProofCondition) {
  // |Y| >= k-1 and ell >= cv(X u Y) - (k-1)
  for (int leaves = 0; leaves <= 6; ++leaves)
    for (int ell = 0; ell <= 8; ++ell) {
      const auto s = star_interval(cv({1}), cv({leaves}), ell);
      for (int k = 1; k <= leaves + 1; ++k) {
        const bool expect = ell >= (leaves + 1) - (k - 1);
        EXPECT_EQ(s.contains(k), expect) << leaves << " " << ell << " " << k;
      }
    }
}

TEST(StarIntervalTest, MonotoneInEll) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const int colors = uniform_int(rng, 1, 3);
    std::vector<std::int64_t> x(colors, 0), y(colors, 0);
    x[uniform_int(rng, 0, colors - 1)] = 1;
    for (int i = uniform_int(rng, 0, 9); i > 0; --i) ++y[uniform_int(rng, 0, colors - 1)];
    StarInterval prev;
    for (int ell = 0; ell <= 4; ++ell) {
      const auto s = star_interval(cv(x), cv(y), ell);
      if (prev.feasible) {
        ASSERT_TRUE(s.feasible);
        EXPECT_LE(s.lo, prev.lo);
        EXPECT_GE(s.hi, prev.hi);
      }
      prev = s;
    }
  }
}

TEST(StarTest, Examples) {
  const std::vector<Color> colors{0, 0, 0, 0, 1, 1, 1};
  auto inst = instance(colors, star_edges(6), 4, 1);
  auto r = solve_star(inst);
  EXPECT_TRUE(r.feasible);
  expect_valid_witness(inst, r);
  EXPECT_FALSE(solve_star(instance({0, 0, 0}, star_edges(2), 2, 1)).feasible);
  EXPECT_TRUE(solve_star(instance({0, 0, 0}, star_edges(2), 2, 2)).feasible);
  EXPECT_THROW(solve_star(instance({0, 0, 0, 0}, path_edges(4), 1, 0)), std::invalid_argument);
}

TEST(StarTest, Oracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_of(rng, {GeneratorClass::kStar}, 4, 10);
    const auto r = solve_star(inst);
    EXPECT_EQ(r.feasible, ref_solve(inst).feasible);
    expect_valid_witness(inst, r);
  }
}

TEST(CaterpillarTest, Examples) {
  // spine 0-1, leaf 2 on 0, leaf 3 on 1
  const auto inst = instance({0, 0, 1, 1}, {{0, 1}, {0, 2}, {1, 3}}, 2, 0);
  auto r = solve_caterpillar(inst, std::vector<Vertex>{0, 1});
  EXPECT_TRUE(r.feasible);
  expect_valid_witness(inst, r);
  EXPECT_THROW(solve_caterpillar(inst, std::vector<Vertex>{0, 2}), std::invalid_argument);
}

TEST(CaterpillarTest, OracleAndCrossChecks) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_of(rng, {GeneratorClass::kCaterpillar}, 5, 10);
    const auto r = solve_caterpillar(inst, *classify_graph(inst.graph).spine);
    EXPECT_EQ(r.feasible, ref_solve(inst).feasible);
    expect_valid_witness(inst, r);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_of(rng, {GeneratorClass::kPath}, 2, 10);
    const auto order = *classify_graph(inst.graph).spine;
    EXPECT_EQ(solve_caterpillar(inst, order).feasible, solve_path(inst, order).feasible);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_of(rng, {GeneratorClass::kStar}, 4, 4);
    EXPECT_EQ(solve_caterpillar(inst, *classify_graph(inst.graph).spine).feasible, solve_star(inst).feasible);
  }
}

TEST(DisjointUnionTest, Examples) {
  EXPECT_TRUE(solve_disjoint_union({{false, true}, {false, true}}, 2).has_value());
  EXPECT_FALSE(solve_disjoint_union({{false, true}, {false, true}}, 1).has_value());
  const std::vector<bool> h1{false, false, true, true, false}, h2{false, true, false, false, true};
  const auto split = solve_disjoint_union({h1, h2}, 6);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(*split, (std::vector<int>{2, 4}));
}

TEST(PathwidthOneTest, DisjointCaterpillarsMatchOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    // up to three components, each a path, star or caterpillar
    std::vector<Edge> edges;
    int n = 0;
    const int parts = uniform_int(rng, 1, 3);
    for (int p = 0; p < parts; ++p) {
      const int size = uniform_int(rng, 1, 4);
      std::vector<Edge> piece;
      if (size >= 2) piece = random_tree_edges(size, rng);
      for (auto [u, v] : piece) edges.emplace_back(u + n, v + n);
      n += size;
    }
    std::vector<Color> colors(n);
    const int palette = uniform_int(rng, 1, 3);
    for (auto& c : colors) c = uniform_int(rng, 0, palette - 1);
    const int k = uniform_int(rng, 1, std::min(n, 5));
    const Instance inst(ColoredGraph(palette, colors, edges), k, uniform_int(rng, 0, 2));
    const auto r = solve_pathwidth_one(inst);
    EXPECT_EQ(r.feasible, ref_solve(inst).feasible);
    expect_valid_witness(inst, r);
  }
}
