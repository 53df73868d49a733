#include "fcd/solver_tw.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace fcd {

namespace {

void normalize(TwState& s) {
  std::vector<int> block_map(s.cc.size(), -1);
  int next = 0;
  for (auto& x : s.pb) {
    if (block_map[x] == -1) block_map[x] = next++;
    x = static_cast<std::uint8_t>(block_map[x]);
  }
  std::vector<ColorVector> cc(next);
  for (std::size_t old = 0; old < block_map.size(); ++old)
    if (block_map[old] != -1) cc[block_map[old]] = std::move(s.cc[old]);
  s.cc = std::move(cc);

  std::array<int, 256> piece_map;
  piece_map.fill(-1);
  next = 0;
  for (auto& x : s.ppb) {
    if (piece_map[x] == -1) piece_map[x] = next++;
    x = static_cast<std::uint8_t>(piece_map[x]);
  }
}

std::string encode(const TwState& s) {
  std::string key;
  key.reserve(s.pb.size() * 2 + 4 + s.cc.size() * (s.cc.empty() ? 0 : s.cc[0].size()) * 8);
  key.append(reinterpret_cast<const char*>(s.pb.data()), s.pb.size());
  key.append(reinterpret_cast<const char*>(s.ppb.data()), s.ppb.size());
  key.append(reinterpret_cast<const char*>(&s.k_done), sizeof(s.k_done));
  for (const auto& cv : s.cc)
    key.append(reinterpret_cast<const char*>(cv.counts().data()),
               cv.counts().size() * sizeof(std::int64_t));
  return key;
}

struct Table {
  std::vector<TwState> rows;
  std::unordered_set<std::string> seen;
};

class TwSolver {
 public:
  TwSolver(const Instance& instance, const NiceTreeDecomposition& ntd,
           const TreewidthOptions& options, TreewidthStats& stats)
      : inst_(instance), g_(instance.graph), ntd_(ntd), opt_(options), stats_(stats) {}

  bool run() {
    std::vector<Table> tables(ntd_.nodes.size());
    for (std::size_t x = 0; x < ntd_.nodes.size(); ++x) {
      const NiceNode& node = ntd_.nodes[x];
      Table& out = tables[x];
      switch (node.type) {
        case NiceNodeType::kLeaf: leaf(node, out); break;
        case NiceNodeType::kIntroduceVertex:
          introduce_vertex(node, tables[node.children[0]], out);
          break;
        case NiceNodeType::kIntroduceEdge: introduce_edge(node, tables[node.children[0]], out); break;
        case NiceNodeType::kForget: forget(node, tables[node.children[0]], out); break;
        case NiceNodeType::kJoin:
          join(node, tables[node.children[0]], tables[node.children[1]], out);
          break;
      }
      for (int c : node.children) tables[c] = Table{};
      out.seen.clear();
    }
    return accepts(tables[ntd_.root]);
  }

 private:
  void add(const NiceNode& node, Table& out, TwState s) {
    if (s.k_done + s.blocks() > inst_.k) return;
    normalize(s);
    if (opt_.check_invariants) check_tw_state(g_, node.bag, s, inst_.k);
    ++stats_.states_generated;
    if (opt_.budget) opt_.budget->charge();
    if (!out.seen.insert(encode(s)).second) return;
    out.rows.push_back(std::move(s));
    stats_.largest_table = std::max(stats_.largest_table, out.rows.size());
    if (out.rows.size() > opt_.max_states)
      throw BudgetExceeded("treewidth table exceeded " + std::to_string(opt_.max_states) +
                           " states");
  }

  static int position(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  void leaf(const NiceNode& node, Table& out) {
    TwState s;
    s.pb = {0};
    s.ppb = {0};
    s.cc.assign(1, ColorVector(g_.num_colors()));
    ++s.cc[0][g_.color(node.vertex)];
    add(node, out, std::move(s));
  }

  void introduce_vertex(const NiceNode& node, const Table& child, Table& out) {
    const int p = position(node.bag, node.vertex);
    const Color c = g_.color(node.vertex);
    for (const TwState& s : child.rows) {
      for (int target = 0; target <= s.blocks(); ++target) {
        TwState t = s;
        t.pb.insert(t.pb.begin() + p, static_cast<std::uint8_t>(target));
        t.ppb.insert(t.ppb.begin() + p, static_cast<std::uint8_t>(255));
        if (target == s.blocks()) t.cc.emplace_back(g_.num_colors());
        ++t.cc[target][c];
        add(node, out, std::move(t));
      }
    }
  }

  void introduce_edge(const NiceNode& node, const Table& child, Table& out) {
    const int pu = position(node.bag, node.edge.first);
    const int pv = position(node.bag, node.edge.second);
    for (const TwState& s : child.rows) {
      TwState t = s;
      if (t.pb[pu] == t.pb[pv]) {
        const auto keep = t.ppb[pu], drop = t.ppb[pv];
        for (auto& x : t.ppb)
          if (x == drop) x = keep;
      }
      add(node, out, std::move(t));
    }
  }

  void forget(const NiceNode& node, const Table& child, Table& out) {
    const auto& child_bag = ntd_.nodes[node.children[0]].bag;
    const int p = position(child_bag, node.vertex);
    for (const TwState& s : child.rows) {
      const auto block = s.pb[p];
      const auto piece = s.ppb[p];
      const auto block_size = std::count(s.pb.begin(), s.pb.end(), block);
      const auto piece_size = std::count(s.ppb.begin(), s.ppb.end(), piece);
      TwState t = s;
      if (block_size == 1) {
        if (mov(s.cc[block]) > inst_.ell) continue;
        t.cc.erase(t.cc.begin() + block);
        for (auto& x : t.pb)
          if (x > block) --x;
        ++t.k_done;
      } else if (piece_size == 1) {
        continue;
      }
      t.pb.erase(t.pb.begin() + p);
      t.ppb.erase(t.ppb.begin() + p);
      add(node, out, std::move(t));
    }
  }

  void join(const NiceNode& node, const Table& left, const Table& right, Table& out) {
    const int b = static_cast<int>(node.bag.size());
    std::unordered_map<std::string, std::vector<const TwState*>> by_pb;
    for (const TwState& s : right.rows)
      by_pb[std::string(s.pb.begin(), s.pb.end())].push_back(&s);
    for (const TwState& y : left.rows) {
      const auto it = by_pb.find(std::string(y.pb.begin(), y.pb.end()));
      if (it == by_pb.end()) continue;
      std::vector<ColorVector> bag_cv(y.blocks(), ColorVector(g_.num_colors()));
      for (int q = 0; q < b; ++q) ++bag_cv[y.pb[q]][g_.color(node.bag[q])];
      for (const TwState* z : it->second) {
        if (y.k_done + z->k_done + y.blocks() > inst_.k) continue;
        TwState t;
        t.pb = y.pb;
        t.k_done = y.k_done + z->k_done;
        t.cc.resize(y.blocks());
        for (int blk = 0; blk < y.blocks(); ++blk) t.cc[blk] = y.cc[blk] + z->cc[blk] - bag_cv[blk];
        std::vector<int> parent(b);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        for (const auto* ppb : {&y.ppb, &z->ppb}) {
          std::array<int, 256> first;
          first.fill(-1);
          for (int q = 0; q < b; ++q) {
            const auto label = (*ppb)[q];
            if (first[label] == -1) first[label] = q;
            else parent[find(q)] = find(first[label]);
          }
        }
        t.ppb.resize(b);
        for (int q = 0; q < b; ++q) t.ppb[q] = static_cast<std::uint8_t>(find(q));
        add(node, out, std::move(t));
      }
    }
  }

  bool accepts(const Table& table) const {
    for (const TwState& s : table.rows) {
      if (s.k_done + s.blocks() != inst_.k || s.pb != s.ppb) continue;
      if (std::all_of(s.cc.begin(), s.cc.end(),
                      [&](const ColorVector& cv) { return mov(cv) <= inst_.ell; }))
        return true;
    }
    return false;
  }

  const Instance& inst_;
  const ColoredGraph& g_;
  const NiceTreeDecomposition& ntd_;
  const TreewidthOptions& opt_;
  TreewidthStats& stats_;
};

}  // namespace

void check_tw_state(const ColoredGraph& g, const std::vector<Vertex>& bag, const TwState& s,
                    int k) {
  const std::size_t b = bag.size();
  if (s.pb.size() != b || s.ppb.size() != b) throw std::logic_error("state size differs from bag");
  int expect = 0;
  for (auto x : s.pb) {
    if (x > expect) throw std::logic_error("pb is not a restricted growth string");
    if (x == expect) ++expect;
  }
  if (expect != s.blocks()) throw std::logic_error("cc has a vector per pb block");
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (s.ppb[i] == s.ppb[j] && s.pb[i] != s.pb[j])
        throw std::logic_error("ppb does not refine pb");
  std::vector<ColorVector> in_bag(s.blocks(), ColorVector(g.num_colors()));
  for (std::size_t i = 0; i < b; ++i) ++in_bag[s.pb[i]][g.color(bag[i])];
  for (int blk = 0; blk < s.blocks(); ++blk) {
    if (s.cc[blk].size() != static_cast<std::size_t>(g.num_colors()))
      throw std::logic_error("cc vector has the wrong length");
    for (int c = 0; c < g.num_colors(); ++c)
      if (s.cc[blk][c] < in_bag[blk][c]) throw std::logic_error("cc smaller than bag counts");
  }
  if (s.k_done < 0 || s.k_done > k) throw std::logic_error("k_done out of range");
}

SolveResult solve_treewidth(const Instance& instance, const NiceTreeDecomposition& ntd,
                            const TreewidthOptions& options, TreewidthStats* stats) {
  validate_nice_tree_decomposition(instance.graph, ntd);
  if (ntd.width > 254) throw BudgetExceeded("treewidth solver supports width up to 254");
  TreewidthStats local;
  TreewidthStats& st = stats ? *stats : local;
  SolveResult result;
  result.feasible = TwSolver(instance, ntd, options, st).run();
  result.work = st.states_generated;
  return result;
}

}  // namespace fcd
