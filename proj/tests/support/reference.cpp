#include "reference.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fcd::testing {

std::int64_t ref_mov(const std::vector<std::int64_t>& counts) {
  std::vector<std::int64_t> sorted = counts;
  std::sort(sorted.rbegin(), sorted.rend());
  if (sorted.size() == 1) return sorted[0];
  return sorted[0] - sorted[1];
}

namespace {

bool connected(const ColoredGraph& g, const std::vector<Vertex>& set) {
  if (set.empty()) return false;
  std::set<Vertex> in(set.begin(), set.end()), seen{set[0]};
  std::vector<Vertex> stack{set[0]};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == set.size();
}

}  // namespace

std::string ref_check(const Instance& instance, const std::vector<int>& assignment) {
  const auto& g = instance.graph;
  std::vector<std::vector<Vertex>> sets(instance.k);
  for (Vertex v = 0; v < g.n(); ++v) sets[assignment[v]].push_back(v);
  for (const auto& s : sets) {
    if (s.empty()) return "empty";
    if (!connected(g, s)) return "disconnected";
    std::vector<std::int64_t> counts(g.num_colors(), 0);
    for (Vertex v : s) ++counts[g.color(v)];
    if (ref_mov(counts) > instance.ell) return "unfair";
  }
  return "";
}

RefResult ref_solve(const Instance& instance, bool collect_all) {
  RefResult out;
  const int n = instance.graph.n();
  const int k = instance.k;
  std::vector<int> rgs(n, 0);
  std::function<bool(int, int)> rec = [&](int pos, int used) -> bool {
    if (pos == n) {
      if (used != k || !ref_check(instance, rgs).empty()) return false;
      out.feasible = true;
      out.witnesses.push_back(rgs);
      return !collect_all;
    }
    if (k - used > n - pos) return false;
    for (int b = 0; b <= std::min(used, k - 1); ++b) {
      rgs[pos] = b;
      if (rec(pos + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  rec(0, 0);
  return out;
}

std::vector<int> ref_feasible_ks(const ColoredGraph& g, std::int64_t ell) {
  std::vector<int> ks;
  for (int k = 1; k <= g.n(); ++k)
    if (ref_solve(Instance(g, k, ell)).feasible) ks.push_back(k);
  return ks;
}

std::string ref_check_nice(const ColoredGraph& g, const NiceTreeDecomposition& ntd) {
  const int count = static_cast<int>(ntd.nodes.size());
  if (count == 0) return "no nodes";
  if (ntd.root != count - 1) return "root is not the last node";
  std::vector<int> parent(count, -1);
  for (int x = 0; x < count; ++x)
    for (int c : ntd.nodes[x].children) {
      if (c < 0 || c >= x) return "child after parent";
      if (parent[c] != -1) return "node with two parents";
      parent[c] = x;
    }
  for (int x = 0; x < count - 1; ++x)
    if (parent[x] == -1) return "unreachable node";
  auto as_set = [](const std::vector<Vertex>& b) { return std::set<Vertex>(b.begin(), b.end()); };
  std::map<Edge, int> introduced;
  int width = 0;
  for (int x = 0; x < count; ++x) {
    const auto& node = ntd.nodes[x];
    const auto bag = as_set(node.bag);
    if (bag.size() != node.bag.size()) return "repeated vertex in bag";
    width = std::max(width, static_cast<int>(bag.size()) - 1);
    auto child_bag = [&](int i) { return as_set(ntd.nodes[node.children[i]].bag); };
    switch (node.type) {
      case NiceNodeType::kLeaf:
        if (!node.children.empty() || bag.size() != 1 || !bag.count(node.vertex)) return "bad leaf";
        break;
      case NiceNodeType::kIntroduceVertex: {
        if (node.children.size() != 1) return "introduce with wrong child count";
        auto cb = child_bag(0);
        if (cb.count(node.vertex) || !bag.count(node.vertex)) return "bad introduce vertex";
        cb.insert(node.vertex);
        if (cb != bag) return "introduce bag mismatch";
        break;
      }
      case NiceNodeType::kIntroduceEdge: {
        if (node.children.size() != 1 || child_bag(0) != bag) return "bad introduce edge";
        const auto [u, v] = node.edge;
        if (!bag.count(u) || !bag.count(v) || !g.has_edge(u, v) || u >= v) return "bad edge";
        if (++introduced[{u, v}] > 1) return "edge introduced twice";
        break;
      }
      case NiceNodeType::kForget: {
        if (node.children.size() != 1) return "forget with wrong child count";
        auto cb = child_bag(0);
        if (!cb.count(node.vertex) || bag.count(node.vertex)) return "bad forget";
        cb.erase(node.vertex);
        if (cb != bag) return "forget bag mismatch";
        break;
      }
      case NiceNodeType::kJoin:
        if (node.children.size() != 2 || child_bag(0) != bag || child_bag(1) != bag) return "bad join";
        break;
    }
  }
  if (width != ntd.width) return "width mismatch";
  for (const auto& e : g.edges())
    if (introduced[e] != 1) return "edge never introduced";
  for (Vertex v = 0; v < g.n(); ++v) {
    // Nodes holding v must form one connected subtree: exactly one of them
    // has a parent that does not hold v.
    int tops = 0;
    for (int x = 0; x < count; ++x) {
      if (!as_set(ntd.nodes[x].bag).count(v)) continue;
      if (parent[x] == -1 || !as_set(ntd.nodes[parent[x]].bag).count(v)) ++tops;
    }
    if (tops != 1) return "vertex " + std::to_string(v) + " occurs in " + std::to_string(tops) + " subtrees";
  }
  return "";
}

std::int64_t ref_max_matching(int left, int right, const std::vector<std::vector<std::int64_t>>& w) {
  std::map<std::pair<int, std::uint32_t>, std::int64_t> memo;
  std::function<std::int64_t(int, std::uint32_t)> best = [&](int l, std::uint32_t used) -> std::int64_t {
    if (l == left) return 0;
    const auto key = std::make_pair(l, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t r = best(l + 1, used);
    for (int j = 0; j < right; ++j)
      if (!(used >> j & 1) && w[l][j] > 0) r = std::max(r, w[l][j] + best(l + 1, used | 1u << j));
    return memo[key] = r;
  };
  return best(0, 0);
}

TreeDecomposition td_via_feedback_edges(const ColoredGraph& g) {
  const auto fes = feedback_edge_set(g);
  std::set<Edge> removed(fes.begin(), fes.end());
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (!removed.count(e)) kept.push_back(e);
  std::vector<Color> colors(g.colors().begin(), g.colors().end());
  const ColoredGraph forest(g.num_colors(), colors, kept);
  TreeDecomposition td = forest_tree_decomposition(forest);
  for (auto& bag : td.bags) {
    for (const auto& e : fes) bag.push_back(e.first);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  return td;
}

int ref_min_cut_edges(const Instance& instance) {
  const RefResult all = ref_solve(instance, true);
  int best = -1;
  for (const auto& a : all.witnesses) {
    int cut = 0;
    for (const auto& [u, v] : instance.graph.edges())
      if (a[u] != a[v]) ++cut;
    if (best == -1 || cut < best) best = cut;
  }
  return best;
}

}  // namespace fcd::testing
