#include "fcd/solver_mln.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "fcd/solvers_poly.hpp"

namespace fcd {

namespace {

struct Segment {
  int branch;
  int begin;  // index into branch vertices, inclusive
  int end;    // exclusive
};

class MlnSearch {
 public:
  MlnSearch(const Instance& instance, const BranchDecomposition& bd, WorkBudget* budget,
            MlnStats& stats)
      : inst_(instance), g_(instance.graph), bd_(bd), budget_(budget), stats_(stats),
        owner_(g_.n(), -1) {}

  bool run() {
    const int x = static_cast<int>(bd_.endpoints.size());
    for (int kp = 1; kp <= std::min(x, inst_.k); ++kp) {
      std::vector<int> rgs(x, 0);
      if (partitions(0, 0, kp, rgs)) return true;
    }
    return false;
  }

 private:
  // Restricted growth strings of the endpoints with exactly kp blocks.
  bool partitions(int pos, int used, int kp, std::vector<int>& rgs) {
    const int x = static_cast<int>(rgs.size());
    if (pos == x) {
      if (used != kp) return false;
      for (int i = 0; i < x; ++i) owner_[bd_.endpoints[i]] = rgs[i];
      kp_ = kp;
      const bool found = cuts(0);
      for (Vertex v : bd_.endpoints) owner_[v] = -1;
      return found;
    }
    if (kp - used > x - pos) return false;
    for (int b = 0; b <= std::min(used, kp - 1); ++b) {
      rgs[pos] = b;
      if (partitions(pos + 1, std::max(used, b + 1), kp, rgs)) return true;
    }
    return false;
  }

  void paint(const Branch& br, int from, int to, int who) {
    for (int i = from; i < to; ++i) owner_[br.vertices[i]] = who;
  }

  bool cuts(std::size_t bi) {
    if (bi == bd_.branches.size()) return check();
    const Branch& br = bd_.branches[bi];
    const int l = br.length();
    const int a = owner_[br.vertices.front()];
    const int b = owner_[br.vertices.back()];
    const int last = l - 1;  // index of v_l
    if (a != b) {
      for (int j = 1; j <= l - 1; ++j) {
        for (int jp = 1; j + jp <= l; ++jp) {
          paint(br, 1, j, a);
          paint(br, l - jp, last, b);
          if (j + jp < l) residual_.push_back({static_cast<int>(bi), j, l - jp});
          const bool found = cuts(bi + 1);
          if (j + jp < l) residual_.pop_back();
          paint(br, 1, last, -1);
          if (found) return true;
        }
      }
      return false;
    }
    paint(br, 1, last, a);
    bool found = cuts(bi + 1);
    paint(br, 1, last, -1);
    if (found) return true;
    for (int j = 1; j <= l - 2; ++j) {
      for (int jp = 1; j + jp <= l - 1; ++jp) {
        paint(br, 1, j, a);
        paint(br, l - jp, last, a);
        residual_.push_back({static_cast<int>(bi), j, l - jp});
        found = cuts(bi + 1);
        residual_.pop_back();
        paint(br, 1, last, -1);
        if (found) return true;
      }
    }
    return false;
  }

  bool check() {
    ++stats_.guesses;
    if (budget_) budget_->charge();
    int residual_vertices = 0;
    for (const auto& s : residual_) residual_vertices += s.end - s.begin;
    const int rest = inst_.k - kp_;
    if (rest < static_cast<int>(residual_.size()) || rest > residual_vertices) return false;
    if (rest == 0 && !residual_.empty()) return false;

    std::vector<std::vector<Vertex>> blocks(kp_);
    for (Vertex v = 0; v < g_.n(); ++v)
      if (owner_[v] >= 0) blocks[owner_[v]].push_back(v);
    for (const auto& blk : blocks) {
      if (mov(color_vector(g_, blk)) > inst_.ell) return false;
      if (!is_connected_subset(g_, blk)) return false;
    }
    std::vector<std::vector<bool>> tables;
    for (const auto& s : residual_) tables.push_back(segment_table(s, rest));
    return solve_disjoint_union(tables, rest).has_value();
  }

  const std::vector<bool>& segment_table(const Segment& s, int max_k) {
    const auto key = std::make_tuple(s.branch, s.begin, s.end, max_k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Branch& br = bd_.branches[s.branch];
    std::vector<Vertex> order(br.vertices.begin() + s.begin, br.vertices.begin() + s.end);
    const ColoredGraph piece = induced_subgraph(g_, order);
    std::vector<Vertex> local(order.size());
    for (std::size_t i = 0; i < local.size(); ++i) local[i] = static_cast<Vertex>(i);
    return cache_[key] = path_feasible_counts(piece, local, inst_.ell, max_k);
  }

  const Instance& inst_;
  const ColoredGraph& g_;
  const BranchDecomposition& bd_;
  WorkBudget* budget_;
  MlnStats& stats_;
  std::vector<int> owner_;
  std::vector<Segment> residual_;
  int kp_ = 0;
  std::map<std::tuple<int, int, int, int>, std::vector<bool>> cache_;
};

}  // namespace

SolveResult solve_mln(const Instance& instance, const BranchDecomposition& bd,
                      WorkBudget* budget, MlnStats* stats) {
  const auto& g = instance.graph;
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("max leaf number solver needs a connected graph");
  MlnStats local;
  MlnStats& st = stats ? *stats : local;

  if (g.n() == 1) {
    SolveResult r;
    r.work = 1;
    r.feasible = instance.k == 1 && mov(color_vector(g, std::vector<Vertex>{0})) <= instance.ell;
    if (r.feasible) r.witness = Districting({0}, 1);
    return r;
  }
  if (bd.branches.size() == 1) {
    const Branch& only = bd.branches.front();
    if (only.is_cycle) {
      std::vector<Vertex> order(only.vertices.begin(), only.vertices.end() - 1);
      return solve_cycle(instance, order);
    }
    return solve_path(instance, only.vertices);
  }
  SolveResult r;
  r.feasible = MlnSearch(instance, bd, budget, st).run();
  r.work = st.guesses;
  return r;
}

}  // namespace fcd
