#include <benchmark/benchmark.h>

#include "fcd/classify.hpp"
#include "fcd/generators.hpp"
#include "fcd/oracle.hpp"
#include "fcd/solver_mln.hpp"
#include "fcd/solver_param.hpp"
#include "fcd/solver_tw.hpp"
#include "fcd/solvers_poly.hpp"

namespace {

fcd::Instance make(fcd::GeneratorClass cls, int n, int colors, int k, std::int64_t ell) {
  return fcd::gen_random_instance(cls, n, colors, k, ell, 12345);
}

void BM_Path(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make({fcd::GeneratorClass::kPath}, n, 3, std::max(1, n / 8), 1);
  const auto order = *fcd::classify_graph(inst.graph).spine;
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_path(inst, order));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Path)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_Caterpillar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make({fcd::GeneratorClass::kCaterpillar}, n, 3, std::max(1, n / 8), 1);
  const auto spine = *fcd::classify_graph(inst.graph).spine;
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_caterpillar(inst, spine));
}
BENCHMARK(BM_Caterpillar)->RangeMultiplier(2)->Range(64, 512);

void BM_Star(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make({fcd::GeneratorClass::kStar}, n, 3, std::max(1, n / 4), 1);
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_star(inst));
}
BENCHMARK(BM_Star)->RangeMultiplier(4)->Range(64, 4096);

void BM_TreewidthTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make({fcd::GeneratorClass::kTree}, n, 2, 3, 1);
  const auto ntd = fcd::nice_tree_decomposition(inst.graph);
  for (auto _ : state) {
    fcd::TreewidthOptions opt;
    benchmark::DoNotOptimize(fcd::solve_treewidth(inst, ntd, opt));
  }
}
BENCHMARK(BM_TreewidthTree)->Arg(10)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Mln(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make({fcd::GeneratorClass::kUnicyclic}, n, 2, 3, 1);
  const auto bd = fcd::branch_decomposition(inst.graph);
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_mln(inst, bd));
}
BENCHMARK(BM_Mln)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Vc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make(fcd::GeneratorClass::bounded_vc(3), n, 2, 3, 1);
  const auto cover = fcd::minimum_vertex_cover(inst.graph, n);
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_vc(inst, cover));
}
BENCHMARK(BM_Vc)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_VcColors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make(fcd::GeneratorClass::bounded_vc(3), n, 2, 3, 1);
  const auto cover = fcd::minimum_vertex_cover(inst.graph, n);
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_vc_colors(inst, cover));
}
BENCHMARK(BM_VcColors)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Deg2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make({fcd::GeneratorClass::kCaterpillar}, n, 2, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fcd::solve_degree_two(inst));
}
BENCHMARK(BM_Deg2)->Arg(10)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_Brute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = make(fcd::GeneratorClass::general(0.3), n, 2, 3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(fcd::brute_force_solve(inst));
}
BENCHMARK(BM_Brute)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
