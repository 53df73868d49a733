#include "fcd/solver_param.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "fcd/solvers_poly.hpp"

namespace fcd {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Restricted growth strings of length n with exactly `blocks` blocks.
template <typename Visit>
bool for_each_partition(int n, int blocks, Visit&& visit) {
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int pos, int used) -> bool {
    if (pos == n) return used == blocks && visit(rgs);
    if (blocks - used > n - pos) return false;
    for (int b = 0; b <= std::min(used, blocks - 1); ++b) {
      rgs[pos] = b;
      if (self(self, pos + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

SolveResult solve_fen_k(const Instance& instance, const std::vector<Edge>& fes, WorkBudget* budget) {
  const auto& g = instance.graph;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  {
    std::set<Edge> removed;
    for (auto [u, v] : fes) {
      const Edge e{std::min(u, v), std::max(u, v)};
      if (!g.has_edge(e.first, e.second) || !removed.insert(e).second)
        throw std::invalid_argument("feedback edge set holds a non-edge or a repeated edge");
    }
    UnionFind uf(g.n());
    for (const auto& e : edges)
      if (!removed.count(e) && !uf.unite(e.first, e.second))
        throw std::invalid_argument("removing the feedback edge set leaves a cycle");
  }
  const int max_cut = std::min<int>(m, static_cast<int>(fes.size()) + instance.k - 1);
  const std::uint64_t limit = budget ? budget->limit() : kDefaultWorkBudget;
  std::uint64_t total = 0;
  {
    std::uint64_t binom = 1;
    for (int s = 0; s <= max_cut; ++s) {
      if (s > 0) {
        const long double next = static_cast<long double>(binom) * (m - s + 1) / s;
        if (next > static_cast<long double>(limit)) throw BudgetExceeded("too many edge cuts to try");
        binom = binom * (m - s + 1) / s;
      }
      total += binom;
      if (total > limit) throw BudgetExceeded("too many edge cuts to try");
    }
  }

  SolveResult result;
  std::vector<int> pick;
  std::vector<char> cut(m, 0);
  auto check = [&]() {
    ++result.work;
    if (budget) budget->charge();
    UnionFind uf(g.n());
    int comps = g.n();
    for (int e = 0; e < m; ++e)
      if (!cut[e] && uf.unite(edges[e].first, edges[e].second)) --comps;
    if (comps != instance.k) return false;
    std::vector<int> label(g.n(), -1);
    std::vector<int> assignment(g.n());
    int next = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      const int r = uf.find(v);
      if (label[r] == -1) label[r] = next++;
      assignment[v] = label[r];
    }
    std::vector<ColorVector> cvs(instance.k, ColorVector(g.num_colors()));
    for (Vertex v = 0; v < g.n(); ++v) ++cvs[assignment[v]][g.color(v)];
    for (const auto& cv : cvs)
      if (mov(cv) > instance.ell) return false;
    result.feasible = true;
    result.witness = Districting(std::move(assignment), instance.k);
    return true;
  };
  auto rec = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return check();
    for (int e = start; e <= m - remaining; ++e) {
      cut[e] = 1;
      const bool found = self(self, e + 1, remaining - 1);
      cut[e] = 0;
      if (found) return true;
    }
    return false;
  };
  for (int s = 0; s <= max_cut; ++s)
    if (rec(rec, 0, s)) break;
  return result;
}

Matching max_weight_bipartite_matching(int left_size, int right_size,
                                       const std::vector<WeightedEdge>& edges) {
  Matching out;
  if (left_size == 0) return out;
  const int rows = left_size;
  const int cols = right_size + left_size;  // extra columns leave a row unmatched
  std::vector<std::vector<std::int64_t>> w(rows, std::vector<std::int64_t>(cols, 0));
  for (const auto& e : edges) {
    if (e.left < 0 || e.left >= left_size || e.right < 0 || e.right >= right_size)
      throw std::invalid_argument("matching edge endpoint out of range");
    if (e.weight <= 0) throw std::invalid_argument("matching weights must be positive");
    w[e.left][e.right] = std::max(w[e.left][e.right], e.weight);
  }
  // Minimum-cost assignment of rows to columns with cost = -weight.
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<int> p(cols + 1, 0), way(cols + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, inf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      std::int64_t delta = inf;
      int j1 = 0;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  for (int j = 1; j <= right_size; ++j) {
    if (p[j] == 0) continue;
    const std::int64_t weight = w[p[j] - 1][j - 1];
    if (weight > 0) {
      out.pairs.emplace_back(p[j] - 1, j - 1);
      out.weight += weight;
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

namespace {

void require_cover(const ColoredGraph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.n() || in[v]) throw std::invalid_argument("invalid vertex cover");
    in[v] = 1;
  }
  for (auto [a, b] : g.edges())
    if (!in[a] && !in[b]) throw std::invalid_argument("vertex set is not a vertex cover");
  if (cover.size() > 62) throw BudgetExceeded("vertex cover too large for guessing");
}

using Mask = std::uint64_t;

// Shared structure of both cover-based solvers: the cover S, the rest I,
// each I vertex's neighborhood as a bitmask over S, and a color palette of
// at least two colors (a missing second color has count zero everywhere,
// which leaves every margin unchanged).
struct CoverFrame {
  const Instance& inst;
  const ColoredGraph& g;
  std::vector<Vertex> s;
  std::vector<Vertex> rest;
  std::vector<Mask> nbr;  // per vertex, neighbors inside S as bits
  std::vector<Mask> s_adj;  // per S index, S-neighbors as bits
  int palette;

  CoverFrame(const Instance& instance, const std::vector<Vertex>& cover)
      : inst(instance), g(instance.graph), s(cover) {
    require_cover(g, cover);
    std::sort(s.begin(), s.end());
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    for (Vertex v = 0; v < g.n(); ++v)
      if (index[v] == -1) rest.push_back(v);
    nbr.assign(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
      for (Vertex w : g.neighbors(v))
        if (index[w] != -1) nbr[v] |= Mask{1} << index[w];
    s_adj.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) s_adj[i] = nbr[s[i]];
    palette = std::max(2, g.num_colors());
  }

  // Number of components of G[block ∪ extra] where block is a set of S
  // indices and extra are neighborhoods of independent vertices.
  int components(Mask block, const std::vector<Mask>& extra) const {
    UnionFind uf(static_cast<int>(s.size()));
    int comps = std::popcount(block);
    for (Mask b = block; b; b &= b - 1) {
      const int i = std::countr_zero(b);
      for (Mask a = s_adj[i] & block; a; a &= a - 1) {
        const int j = std::countr_zero(a);
        if (uf.unite(i, j)) --comps;
      }
    }
    for (Mask e : extra) {
      const Mask touch = e & block;
      if (!touch) {
        ++comps;
        continue;
      }
      const int first = std::countr_zero(touch);
      for (Mask a = touch & (touch - 1); a; a &= a - 1)
        if (uf.unite(first, std::countr_zero(a))) --comps;
    }
    return comps;
  }

  std::vector<int> kprime_choices() const {
    std::vector<int> out;
    const int sz = static_cast<int>(s.size());
    if (sz == 0) {
      out.push_back(0);
      return out;
    }
    if (inst.ell == 0) {
      if (inst.k <= sz) out.push_back(inst.k);
      return out;
    }
    for (int kp = 1; kp <= std::min(sz, inst.k); ++kp) out.push_back(kp);
    return out;
  }

  std::vector<Mask> blocks_of(const std::vector<int>& rgs, int kp) const {
    std::vector<Mask> blocks(kp, 0);
    for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]] |= Mask{1} << i;
    return blocks;
  }

  ColorVector cover_colors(Mask block) const {
    ColorVector cv(palette);
    for (Mask b = block; b; b &= b - 1) ++cv[g.color(s[std::countr_zero(b)])];
    return cv;
  }
};

// Enumerates connector sequences over candidate items (ascending) for each
// block: every new item must merge at least two current components, and the
// sequence stops as soon as the block is connected.
template <typename Items, typename Usable, typename Next>
bool connectors(const CoverFrame& f, const std::vector<Mask>& blocks, std::size_t bi,
                const Items& item_nbr, std::vector<std::vector<int>>& chosen, Usable&& usable,
                Next&& next) {
  if (bi == blocks.size()) return next();
  auto rec = [&](auto&& self, int from, std::vector<Mask>& extra) -> bool {
    const int comps = f.components(blocks[bi], extra);
    if (comps == 1)
      return connectors(f, blocks, bi + 1, item_nbr, chosen, usable, next);
    for (int it = from; it < static_cast<int>(item_nbr.size()); ++it) {
      if (!usable(it)) continue;
      const Mask touch = item_nbr[it] & blocks[bi];
      if (std::popcount(touch) < 2) continue;
      extra.push_back(item_nbr[it]);
      if (f.components(blocks[bi], extra) >= comps) {
        extra.pop_back();
        continue;
      }
      chosen[bi].push_back(it);
      const bool found = self(self, it + 1, extra);
      chosen[bi].pop_back();
      extra.pop_back();
      if (found) return true;
    }
    return false;
  };
  std::vector<Mask> extra;
  return rec(rec, 0, extra);
}

class VcSearch {
 public:
  VcSearch(const CoverFrame& frame, WorkBudget* budget, VcStats& stats)
      : f_(frame), budget_(budget), stats_(stats) {}

  bool run() {
    std::vector<Mask> item_nbr;
    for (Vertex v : f_.rest) item_nbr.push_back(f_.nbr[v]);
    in_j_.assign(f_.rest.size(), 0);
    for (int kp : f_.kprime_choices()) {
      const bool found = for_each_partition(static_cast<int>(f_.s.size()), kp, [&](const std::vector<int>& rgs) {
        blocks_ = f_.blocks_of(rgs, kp);
        chosen_.assign(kp, {});
        return connectors(
            f_, blocks_, 0, item_nbr, chosen_, [](int) { return true; },
            [&]() { return after_connectors(); });
      });
      if (found) return true;
    }
    return false;
  }

 private:
  struct BlockPlan {
    ColorVector base;                      // colors of S_i ∪ J_i
    std::vector<std::int64_t> eligible;    // I' vertices per color adjacent to S_i
    int top = 0, second = 1;
    std::int64_t z_top = 0, z_second = 0;
  };

  bool after_connectors() {
    std::fill(in_j_.begin(), in_j_.end(), 0);
    for (const auto& js : chosen_)
      for (int it : js) {
        if (in_j_[it]) return false;
        in_j_[it] = 1;
      }
    const int kp = static_cast<int>(blocks_.size());
    plans_.assign(kp, {});
    free_.clear();
    for (std::size_t it = 0; it < f_.rest.size(); ++it)
      if (!in_j_[it]) free_.push_back(f_.rest[it]);
    const int rest_districts = f_.inst.k - kp;
    if (rest_districts < 0 || rest_districts > static_cast<int>(free_.size())) return false;
    if (f_.inst.ell == 0 && rest_districts > 0) return false;
    free_per_color_.assign(f_.palette, 0);
    for (Vertex v : free_) ++free_per_color_[f_.g.color(v)];
    for (int i = 0; i < kp; ++i) {
      BlockPlan& p = plans_[i];
      p.base = f_.cover_colors(blocks_[i]);
      for (int it : chosen_[i]) ++p.base[f_.g.color(f_.rest[it])];
      p.eligible.assign(f_.palette, 0);
      for (Vertex v : free_)
        if (f_.nbr[v] & blocks_[i]) ++p.eligible[f_.g.color(v)];
    }
    demand_.assign(f_.palette, 0);
    return choose_colors(0, rest_districts);
  }

  bool choose_colors(int i, std::int64_t weight_two) {
    const int kp = static_cast<int>(plans_.size());
    if (i == kp) return match(weight_two);
    BlockPlan& p = plans_[i];
    const std::int64_t ell = f_.inst.ell;
    const std::int64_t budget_left = static_cast<std::int64_t>(free_.size()) - weight_two;
    for (int c = 0; c < f_.palette; ++c) {
      for (int c2 = 0; c2 < f_.palette; ++c2) {
        if (c2 == c) continue;
        std::int64_t other_floor = 0;
        for (int o = 0; o < f_.palette; ++o)
          if (o != c) other_floor = std::max(other_floor, p.base[o]);
        for (std::int64_t z = p.base[c]; z <= p.base[c] + p.eligible[c]; ++z) {
          const std::int64_t add_top = z - p.base[c];
          if (add_top > budget_left || demand_[c] + add_top > free_per_color_[c]) break;
          const std::int64_t lo = std::max({z - ell, p.base[c2], other_floor});
          const std::int64_t hi = std::min(z, p.base[c2] + p.eligible[c2]);
          for (std::int64_t z2 = lo; z2 <= hi; ++z2) {
            const std::int64_t add_second = z2 - p.base[c2];
            if (add_top + add_second > budget_left ||
                demand_[c2] + add_second > free_per_color_[c2])
              break;
            p.top = c;
            p.second = c2;
            p.z_top = z;
            p.z_second = z2;
            demand_[c] += add_top;
            demand_[c2] += add_second;
            const bool found = choose_colors(i + 1, weight_two + add_top + add_second);
            demand_[c] -= add_top;
            demand_[c2] -= add_second;
            if (found) return true;
          }
        }
      }
    }
    return false;
  }

  bool match(std::int64_t weight_two) {
    ++stats_.guesses;
    if (budget_) budget_->charge();
    const int left = static_cast<int>(free_.size());
    std::vector<WeightedEdge> edges;
    int right = 0;
    auto add_slots = [&](std::int64_t count, std::int64_t weight, auto&& eligible) {
      for (std::int64_t q = 0; q < count; ++q, ++right)
        for (int l = 0; l < left; ++l)
          if (eligible(free_[l])) edges.push_back({l, right, weight});
    };
    for (std::size_t i = 0; i < plans_.size(); ++i) {
      const BlockPlan& p = plans_[i];
      const Mask block = blocks_[i];
      for (int c = 0; c < f_.palette; ++c) {
        const bool two = c == p.top || c == p.second;
        const std::int64_t cap = c == p.top ? p.z_top : p.z_second;
        const std::int64_t count = std::min<std::int64_t>(cap - p.base[c], p.eligible[c]);
        add_slots(count, two ? 2 : 1, [&](Vertex v) {
          return f_.g.color(v) == c && (f_.nbr[v] & block) != 0;
        });
      }
    }
    const std::int64_t singles = f_.inst.k - static_cast<std::int64_t>(plans_.size());
    add_slots(singles, 2, [](Vertex) { return true; });
    ++stats_.matchings;
    const Matching mm = max_weight_bipartite_matching(left, right, edges);
    return mm.weight >= static_cast<std::int64_t>(left) + weight_two;
  }

  const CoverFrame& f_;
  WorkBudget* budget_;
  VcStats& stats_;
  std::vector<Mask> blocks_;
  std::vector<std::vector<int>> chosen_;
  std::vector<char> in_j_;
  std::vector<BlockPlan> plans_;
  std::vector<Vertex> free_;
  std::vector<std::int64_t> free_per_color_;
  std::vector<std::int64_t> demand_;
};

class VcColorsSearch {
 public:
  VcColorsSearch(const CoverFrame& frame, WorkBudget* budget, VcStats& stats)
      : f_(frame), budget_(budget), stats_(stats) {
    std::map<std::pair<int, Mask>, int> index;
    for (Vertex v : f_.rest) {
      const auto key = std::make_pair(f_.g.color(v), f_.nbr[v]);
      auto [it, fresh] = index.emplace(key, static_cast<int>(types_.size()));
      if (fresh) types_.push_back({key.first, key.second, 0});
      ++types_[it->second].count;
    }
  }

  bool run() {
    std::vector<Mask> item_nbr;
    for (const auto& t : types_) item_nbr.push_back(t.nbr);
    for (int kp : f_.kprime_choices()) {
      const bool found = for_each_partition(static_cast<int>(f_.s.size()), kp, [&](const std::vector<int>& rgs) {
        blocks_ = f_.blocks_of(rgs, kp);
        chosen_.assign(kp, {});
        return connectors(
            f_, blocks_, 0, item_nbr, chosen_, [](int) { return true; },
            [&]() { return after_types(); });
      });
      if (found) return true;
    }
    return false;
  }

 private:
  struct Type {
    int color;
    Mask nbr;
    int count;
  };

  bool after_types() {
    std::vector<int> uses(types_.size(), 0);
    for (const auto& ts : chosen_)
      for (int t : ts)
        if (++uses[t] > types_[t].count) return false;
    const int kp = static_cast<int>(blocks_.size());
    const std::int64_t singles = f_.inst.k - kp;
    if (f_.inst.ell == 0 && singles > 0) return false;
    if (singles < 0) return false;
    tops_.assign(kp, {0, 1});
    return choose_pairs(0);
  }

  bool choose_pairs(int i) {
    if (i == static_cast<int>(blocks_.size())) return solve_system();
    for (int c = 0; c < f_.palette; ++c)
      for (int c2 = 0; c2 < f_.palette; ++c2) {
        if (c == c2) continue;
        tops_[i] = {c, c2};
        if (choose_pairs(i + 1)) return true;
      }
    return false;
  }

  // Per-district summary: count of the top color, of the second color, and
  // the largest count among the other colors processed so far.
  bool solve_system() {
    ++stats_.guesses;
    if (budget_) budget_->charge();
    const int kp = static_cast<int>(blocks_.size());
    const std::int64_t singles = f_.inst.k - kp;
    const std::int64_t ell = f_.inst.ell;
    std::vector<std::vector<char>> required(kp, std::vector<char>(types_.size(), 0));
    for (int i = 0; i < kp; ++i)
      for (int t : chosen_[i]) required[i][t] = 1;
    std::vector<ColorVector> cover_cv(kp);
    for (int i = 0; i < kp; ++i) cover_cv[i] = f_.cover_colors(blocks_[i]);

    // state: [leftover, top_i, second_i, other_i ...]
    std::set<std::vector<std::int64_t>> states{std::vector<std::int64_t>(1 + 3 * kp, 0)};
    for (int c = 0; c < f_.palette; ++c) {
      // All ways the types of color c can be split: per-district additions
      // plus the number left for singleton districts.
      std::set<std::vector<std::int64_t>> adds{std::vector<std::int64_t>(kp + 1, 0)};
      for (std::size_t t = 0; t < types_.size(); ++t) {
        if (types_[t].color != c) continue;
        std::set<std::vector<std::int64_t>> grown;
        std::vector<std::int64_t> x(kp, 0);
        auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
          if (i == kp) {
            for (const auto& base : adds) {
              auto next = base;
              for (int d = 0; d < kp; ++d) next[d] += x[d];
              next[kp] += left;
              if (next[kp] <= singles) grown.insert(std::move(next));
              ++stats_.system_states;
              if (budget_) budget_->charge();
            }
            return;
          }
          const bool touches = (types_[t].nbr & blocks_[i]) != 0;
          const std::int64_t lo = required[i][t] ? 1 : 0;
          const std::int64_t hi = touches ? left : 0;
          for (std::int64_t q = lo; q <= hi; ++q) {
            x[i] = q;
            self(self, i + 1, left - q);
          }
          x[i] = 0;
        };
        rec(rec, 0, types_[t].count);
        adds = std::move(grown);
        if (adds.empty()) return false;
      }
      std::set<std::vector<std::int64_t>> next_states;
      for (const auto& st : states) {
        for (const auto& add : adds) {
          auto ns = st;
          ns[0] += add[kp];
          if (ns[0] > singles) continue;
          bool ok = true;
          for (int i = 0; i < kp && ok; ++i) {
            const std::int64_t count = cover_cv[i][c] + add[i];
            auto& [top, second] = tops_[i];
            std::int64_t& a = ns[1 + 3 * i];
            std::int64_t& b = ns[2 + 3 * i];
            std::int64_t& o = ns[3 + 3 * i];
            if (c == top) a = count;
            else if (c == second) b = count;
            else o = std::max(o, count);
            const bool a_known = top <= c, b_known = second <= c;
            if (b_known && o > b) ok = false;
            if (a_known && b_known && (b > a || a > b + ell)) ok = false;
            if (a_known && !b_known && o > a) ok = false;
          }
          if (ok) next_states.insert(std::move(ns));
        }
      }
      states = std::move(next_states);
      if (states.empty()) return false;
    }
    for (const auto& st : states)
      if (st[0] == singles) return true;
    return false;
  }

  const CoverFrame& f_;
  WorkBudget* budget_;
  VcStats& stats_;
  std::vector<Type> types_;
  std::vector<Mask> blocks_;
  std::vector<std::vector<int>> chosen_;
  std::vector<std::pair<int, int>> tops_;
};

}  // namespace

SolveResult solve_vc(const Instance& instance, const std::vector<Vertex>& cover,
                     WorkBudget* budget, VcStats* stats) {
  const CoverFrame frame(instance, cover);
  VcStats local;
  VcStats& st = stats ? *stats : local;
  SolveResult r;
  r.feasible = VcSearch(frame, budget, st).run();
  r.work = st.guesses;
  return r;
}

SolveResult solve_vc_colors(const Instance& instance, const std::vector<Vertex>& cover,
                            WorkBudget* budget, VcStats* stats) {
  const CoverFrame frame(instance, cover);
  VcStats local;
  VcStats& st = stats ? *stats : local;
  SolveResult r;
  r.feasible = VcColorsSearch(frame, budget, st).run();
  r.work = st.system_states;
  return r;
}

std::vector<bool> degree_two_feasible_counts(const ColoredGraph& g, std::int64_t ell, int max_k,
                                             WorkBudget* budget) {
  std::vector<bool> out(max_k + 1, false);
  const int n = g.n();
  if (n == 0) return out;
  if (n == 1) {
    if (max_k >= 1) out[1] = mov(color_vector(g, std::vector<Vertex>{0})) <= ell;
    return out;
  }
  if (n == 2) {
    if (max_k >= 1) out[1] = mov(color_vector(g, std::vector<Vertex>{0, 1})) <= ell;
    if (max_k >= 2) out[2] = ell >= 1;
    return out;
  }
  std::vector<Vertex> x;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 2) x.push_back(v);
  std::vector<ColorVector> x_cv(x.size(), ColorVector(g.num_colors()));
  std::vector<ColorVector> y_cv(x.size(), ColorVector(g.num_colors()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    ++x_cv[i][g.color(x[i])];
    for (Vertex w : g.neighbors(x[i]))
      if (g.degree(w) == 1) ++y_cv[i][g.color(w)];
  }
  const int p = static_cast<int>(x.size());
  for (int kp = 1; kp <= std::min(p, max_k); ++kp) {
    for_each_partition(p, kp, [&](const std::vector<int>& rgs) {
      if (budget) budget->charge();
      std::vector<std::vector<Vertex>> blocks(kp);
      for (int i = 0; i < p; ++i) blocks[rgs[i]].push_back(x[i]);
      for (const auto& b : blocks)
        if (!is_connected_subset(g, b)) return false;
      std::int64_t lo = 0, hi = 0;
      for (int b = 0; b < kp; ++b) {
        ColorVector xc(g.num_colors()), yc(g.num_colors());
        for (int i = 0; i < p; ++i)
          if (rgs[i] == b) {
            xc += x_cv[i];
            yc += y_cv[i];
          }
        const StarInterval s = star_interval(xc, yc, ell);
        if (!s.feasible) return false;
        lo += s.lo;
        hi += s.hi;
      }
      for (std::int64_t j = lo; j <= std::min<std::int64_t>(hi, max_k); ++j) out[j] = true;
      return false;
    });
  }
  return out;
}

SolveResult solve_degree_two(const Instance& instance, WorkBudget* budget) {
  const auto& g = instance.graph;
  SolveResult r;
  std::vector<std::vector<bool>> tables;
  for (const auto& comp : connected_components(g)) {
    const ColoredGraph piece = induced_subgraph(g, comp);
    tables.push_back(degree_two_feasible_counts(piece, instance.ell,
                                                std::min<int>(instance.k, piece.n()), budget));
    r.work += 1;
  }
  if (budget) r.work = budget->used();
  r.feasible = solve_disjoint_union(tables, instance.k).has_value();
  return r;
}

}  // namespace fcd
