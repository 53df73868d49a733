#include "fcd/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace fcd {

namespace {

using Mask = std::uint64_t;

class PartitionWalker {
 public:
  PartitionWalker(const ColoredGraph& g, int k, const std::function<bool(const Districting&)>& visit)
      : g_(g), n_(g.n()), k_(k), visit_(visit), nbr_(n_, 0), assignment_(n_, -1), members_(k, 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) nbr_[v] |= Mask{1} << w;
  }

  void run() { descend(0, 0); }

 private:
  // Component of `start` inside `within`.
  Mask component(Mask within, int start) const {
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask f = frontier; f; f &= f - 1) grow |= nbr_[std::countr_zero(f)];
      grow &= within & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp;
  }

  // A district whose pieces cannot all be joined through unassigned vertices
  // is dead.
  bool alive(int opened, Mask unassigned) const {
    for (int d = 0; d < opened; ++d) {
      Mask rest = members_[d];
      const Mask first = component(rest, std::countr_zero(rest));
      if (first == rest) continue;
      for (Mask left = rest; left;) {
        const Mask comp = component(rest, std::countr_zero(left));
        Mask reach = 0;
        for (Mask c = comp; c; c &= c - 1) reach |= nbr_[std::countr_zero(c)];
        if ((reach & unassigned) == 0) return false;
        left &= ~comp;
      }
    }
    return true;
  }

  bool descend(int v, int opened) {
    if (v == n_) {
      if (opened != k_) return true;
      for (int d = 0; d < k_; ++d)
        if (component(members_[d], std::countr_zero(members_[d])) != members_[d]) return true;
      return visit_(Districting(assignment_, k_));
    }
    const Mask unassigned = v + 1 >= 64 ? 0 : ~Mask{0} << (v + 1);
    const Mask all = n_ >= 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    const int limit = std::min(opened + 1, k_);
    for (int d = 0; d < limit; ++d) {
      const int next_opened = d == opened ? opened + 1 : opened;
      if (n_ - v - 1 < k_ - next_opened) continue;
      assignment_[v] = d;
      members_[d] |= Mask{1} << v;
      const bool keep_going =
          !alive(next_opened, unassigned & all) || descend(v + 1, next_opened);
      members_[d] &= ~(Mask{1} << v);
      assignment_[v] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const ColoredGraph& g_;
  int n_;
  int k_;
  const std::function<bool(const Districting&)>& visit_;
  std::vector<Mask> nbr_;
  std::vector<int> assignment_;
  std::vector<Mask> members_;
};

}  // namespace

void enumerate_connected_partitions(const ColoredGraph& graph, int k,
                                    const std::function<bool(const Districting&)>& visit,
                                    int cap) {
  if (graph.n() > cap || graph.n() > 63)
    throw BudgetExceeded("brute force is capped at n=" + std::to_string(cap) + " (n=" +
                         std::to_string(graph.n()) + ")");
  if (k < 1 || k > graph.n()) return;
  PartitionWalker(graph, k, visit).run();
}

std::vector<Districting> connected_partitions(const ColoredGraph& graph, int k, int cap) {
  std::vector<Districting> out;
  enumerate_connected_partitions(
      graph, k,
      [&](const Districting& d) {
        out.push_back(d);
        return true;
      },
      cap);
  return out;
}

SolveResult brute_force_solve(const Instance& instance, int cap) {
  SolveResult result;
  const auto& g = instance.graph;
  enumerate_connected_partitions(
      g, instance.k,
      [&](const Districting& d) {
        ++result.work;
        std::vector<ColorVector> cvs(d.k(), ColorVector(g.num_colors()));
        for (Vertex v = 0; v < g.n(); ++v) ++cvs[d.district_of(v)][g.color(v)];
        for (const auto& cv : cvs)
          if (mov(cv) > instance.ell) return true;
        result.feasible = true;
        result.witness = d;
        return false;
      },
      cap);
  return result;
}

}  // namespace fcd
