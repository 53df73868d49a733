#include "fcd/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace fcd {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kPath: return "path";
    case GraphClass::kCycle: return "cycle";
    case GraphClass::kStar: return "star";
    case GraphClass::kCaterpillar: return "caterpillar";
    case GraphClass::kTree: return "tree";
    case GraphClass::kForest: return "forest";
    case GraphClass::kGeneral: return "general";
  }
  return "unknown";
}

namespace {

// Walks a connected graph of max degree <= 2 starting at `start`, first
// stepping to the smallest neighbor.
std::vector<Vertex> walk_degree_two(const ColoredGraph& g, Vertex start) {
  std::vector<Vertex> order{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev && w != start) {
        next = w;
        break;
      }
    if (next == -1) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Spine of a tree after deleting its leaves, if that remainder is a path.
std::optional<std::vector<Vertex>> caterpillar_spine(const ColoredGraph& g) {
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 2) inner.push_back(v);
  if (inner.empty()) return std::nullopt;
  std::vector<char> is_inner(g.n(), 0);
  for (Vertex v : inner) is_inner[v] = 1;
  auto inner_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += is_inner[w];
    return d;
  };
  Vertex end = -1;
  for (Vertex v : inner) {
    int d = inner_degree(v);
    if (d > 2) return std::nullopt;
    if (d <= 1 && end == -1) end = v;
  }
  if (end == -1) return std::nullopt;
  std::vector<Vertex> spine{end};
  Vertex prev = -1;
  Vertex cur = end;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (is_inner[w] && w != prev) {
        next = w;
        break;
      }
    if (next == -1) break;
    spine.push_back(next);
    prev = cur;
    cur = next;
  }
  if (spine.size() != inner.size()) return std::nullopt;
  return spine;
}

}  // namespace

StructureReport classify_graph(const ColoredGraph& g) {
  StructureReport r;
  const int n = g.n();
  const int m = g.num_edges();
  const auto comps = connected_components(g);
  r.num_components = static_cast<int>(comps.size());
  r.is_connected = r.num_components == 1;
  r.num_edges = m;
  r.fen = m - n + r.num_components;
  int max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= 2) ++r.degree_ge2_count;
    max_degree = std::max(max_degree, g.degree(v));
  }
  if (n == 0) {
    r.class_tag = GraphClass::kForest;
    return r;
  }

  const bool forest = r.fen == 0;
  if (r.is_connected && forest) {
    if (max_degree <= 2) {
      Vertex start = 0;
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) <= 1) {
          start = v;
          break;
        }
      r.class_tag = GraphClass::kPath;
      r.spine = walk_degree_two(g, start);
      return r;
    }
    if (n >= 4 && max_degree == n - 1) {
      r.class_tag = GraphClass::kStar;
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) r.spine = std::vector<Vertex>{v};
      return r;
    }
    if (auto spine = caterpillar_spine(g)) {
      if (spine->back() < spine->front()) std::reverse(spine->begin(), spine->end());
      r.class_tag = GraphClass::kCaterpillar;
      r.spine = std::move(spine);
      return r;
    }
    r.class_tag = GraphClass::kTree;
    return r;
  }
  if (r.is_connected && m == n && max_degree == 2) {
    bool all_two = true;
    for (Vertex v = 0; v < n; ++v) all_two = all_two && g.degree(v) == 2;
    if (all_two) {
      r.class_tag = GraphClass::kCycle;
      r.spine = walk_degree_two(g, 0);
      return r;
    }
  }
  r.class_tag = forest ? GraphClass::kForest : GraphClass::kGeneral;
  return r;
}

BranchDecomposition branch_decomposition(const ColoredGraph& g) {
  if (g.n() == 0 || connected_components(g).size() != 1)
    throw std::invalid_argument("branch decomposition needs a connected graph");
  BranchDecomposition bd;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) bd.endpoints.push_back(v);

  if (bd.endpoints.empty()) {
    // A single cycle: anchor it at vertex 0.
    Branch b;
    b.is_cycle = true;
    b.vertices = walk_degree_two(g, 0);
    b.vertices.push_back(0);
    bd.endpoints.push_back(0);
    bd.branches.push_back(std::move(b));
    return bd;
  }

  std::set<Edge> used;
  auto key = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (Vertex x : bd.endpoints) {
    for (Vertex first : g.neighbors(x)) {
      if (used.count(key(x, first))) continue;
      Branch b;
      b.vertices = {x, first};
      used.insert(key(x, first));
      Vertex prev = x;
      Vertex cur = first;
      while (g.degree(cur) == 2 && cur != x) {
        Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        used.insert(key(cur, next));
        b.vertices.push_back(next);
        prev = cur;
        cur = next;
      }
      b.is_cycle = cur == x;
      bd.branches.push_back(std::move(b));
    }
  }
  return bd;
}

std::vector<Edge> feedback_edge_set(const ColoredGraph& g) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) {
      out.emplace_back(u, v);
    } else {
      parent[a] = b;
    }
  }
  return out;
}

bool is_vertex_cover(const ColoredGraph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.n()) return false;
    in[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

namespace {

bool cover_search(const ColoredGraph& g, const std::vector<Edge>& edges, std::vector<char>& in,
                  int remaining, WorkBudget* budget) {
  if (budget) budget->charge();
  const Edge* open = nullptr;
  for (const auto& e : edges)
    if (!in[e.first] && !in[e.second]) {
      open = &e;
      break;
    }
  if (!open) return true;
  if (remaining == 0) return false;
  for (Vertex pick : {open->first, open->second}) {
    in[pick] = 1;
    if (cover_search(g, edges, in, remaining - 1, budget)) return true;
    in[pick] = 0;
  }
  return false;
}

}  // namespace

std::vector<Vertex> minimum_vertex_cover(const ColoredGraph& g, int max_size, WorkBudget* budget) {
  const auto edges = g.edges();
  for (int size = 0; size <= max_size; ++size) {
    std::vector<char> in(g.n(), 0);
    if (cover_search(g, edges, in, size, budget)) {
      std::vector<Vertex> cover;
      for (Vertex v = 0; v < g.n(); ++v)
        if (in[v]) cover.push_back(v);
      return cover;
    }
  }
  throw BudgetExceeded("vertex cover number exceeds " + std::to_string(max_size));
}

int TreeDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& b : bags) widest = std::max(widest, b.size());
  return static_cast<int>(widest) - 1;
}

namespace {

std::vector<std::vector<int>> children_of(const TreeDecomposition& td) {
  std::vector<std::vector<int>> children(td.bags.size());
  for (std::size_t i = 0; i < td.parent.size(); ++i)
    if (td.parent[i] >= 0) children[td.parent[i]].push_back(static_cast<int>(i));
  return children;
}

int root_of(const TreeDecomposition& td) {
  for (std::size_t i = 0; i < td.parent.size(); ++i)
    if (td.parent[i] == -1) return static_cast<int>(i);
  return -1;
}

std::vector<int> post_order(const std::vector<std::vector<int>>& children, int root) {
  std::vector<int> order;
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < children[node].size()) {
      int child = children[node][next++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

}  // namespace

void validate_tree_decomposition(const ColoredGraph& g, const TreeDecomposition& td) {
  const int count = static_cast<int>(td.bags.size());
  if (count == 0) throw InvalidDecomposition(0, "no nodes");
  if (static_cast<int>(td.parent.size()) != count)
    throw InvalidDecomposition(0, "parent list length differs from bag count");
  int roots = 0;
  for (int i = 0; i < count; ++i) {
    if (td.parent[i] == -1) {
      ++roots;
    } else if (td.parent[i] < 0 || td.parent[i] >= count || td.parent[i] == i) {
      throw InvalidDecomposition(0, "node " + std::to_string(i) + " has an invalid parent");
    }
    for (Vertex v : td.bags[i])
      if (v < 0 || v >= g.n())
        throw InvalidDecomposition(0, "bag of node " + std::to_string(i) + " holds an unknown vertex");
    std::vector<Vertex> b = td.bags[i];
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw InvalidDecomposition(0, "bag of node " + std::to_string(i) + " repeats a vertex");
  }
  if (roots != 1) throw InvalidDecomposition(0, "expected exactly one root");
  const auto children = children_of(td);
  const int root = root_of(td);
  if (static_cast<int>(post_order(children, root).size()) != count)
    throw InvalidDecomposition(0, "parent links contain a cycle");

  std::vector<char> covered(g.n(), 0);
  for (const auto& b : td.bags)
    for (Vertex v : b) covered[v] = 1;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!covered[v]) throw InvalidDecomposition(1, "vertex " + std::to_string(v) + " is in no bag");

  std::set<Edge> in_bag;
  for (const auto& b : td.bags)
    for (Vertex u : b)
      for (Vertex v : b)
        if (u < v) in_bag.emplace(u, v);
  for (const auto& e : g.edges())
    if (!in_bag.count(e))
      throw InvalidDecomposition(2, "edge {" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + "} is in no bag");

  // Occurrences of v are connected iff exactly one occurrence has a parent
  // that does not contain v.
  std::vector<std::vector<char>> holds(count, std::vector<char>(g.n(), 0));
  for (int i = 0; i < count; ++i)
    for (Vertex v : td.bags[i]) holds[i][v] = 1;
  std::vector<int> tops(g.n(), 0);
  for (int i = 0; i < count; ++i)
    for (Vertex v : td.bags[i])
      if (td.parent[i] == -1 || !holds[td.parent[i]][v]) ++tops[v];
  for (Vertex v = 0; v < g.n(); ++v)
    if (tops[v] > 1)
      throw InvalidDecomposition(3, "nodes holding vertex " + std::to_string(v) +
                                        " are not connected");
}

TreeDecomposition forest_tree_decomposition(const ColoredGraph& g) {
  if (feedback_edge_set(g).size() != 0)
    throw std::invalid_argument("graph is not a forest; supply a tree decomposition");
  TreeDecomposition td;
  std::vector<int> node_of(g.n(), -1);
  std::vector<int> component_roots;
  for (const auto& comp : connected_components(g)) {
    const Vertex root = comp.front();
    node_of[root] = static_cast<int>(td.bags.size());
    td.bags.push_back({root});
    td.parent.push_back(-1);
    component_roots.push_back(node_of[root]);
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (node_of[w] != -1) continue;
        node_of[w] = static_cast<int>(td.bags.size());
        td.bags.push_back({u, w});
        td.parent.push_back(node_of[u]);
        queue.push_back(w);
      }
    }
  }
  if (component_roots.size() > 1) {
    const int top = static_cast<int>(td.bags.size());
    td.bags.push_back({});
    td.parent.push_back(-1);
    for (int r : component_roots) td.parent[r] = top;
  }
  for (auto& b : td.bags) std::sort(b.begin(), b.end());
  return td;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(NiceTreeDecomposition& out) : out_(out) {}

  int leaf(Vertex v) { return add({NiceNodeType::kLeaf, {v}, v, {-1, -1}, {}}); }

  int introduce_vertex(int child, Vertex v) {
    auto bag = out_.nodes[child].bag;
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    return add({NiceNodeType::kIntroduceVertex, std::move(bag), v, {-1, -1}, {child}});
  }

  int forget(int child, Vertex v) {
    auto bag = out_.nodes[child].bag;
    bag.erase(std::find(bag.begin(), bag.end(), v));
    return add({NiceNodeType::kForget, std::move(bag), v, {-1, -1}, {child}});
  }

  int introduce_edge(int child, Edge e) {
    auto bag = out_.nodes[child].bag;
    return add({NiceNodeType::kIntroduceEdge, std::move(bag), -1, e, {child}});
  }

  int join(int a, int b) {
    auto bag = out_.nodes[a].bag;
    return add({NiceNodeType::kJoin, std::move(bag), -1, {-1, -1}, {a, b}});
  }

  // Forgets from \ to, then introduces to \ from, both ascending.
  int convert(int node, const std::vector<Vertex>& to) {
    const auto from = out_.nodes[node].bag;
    for (Vertex v : from)
      if (!std::binary_search(to.begin(), to.end(), v)) node = forget(node, v);
    for (Vertex v : to)
      if (!std::binary_search(from.begin(), from.end(), v)) node = introduce_vertex(node, v);
    return node;
  }

 private:
  int add(NiceNode node) {
    out_.nodes.push_back(std::move(node));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  NiceTreeDecomposition& out_;
};

}  // namespace

void validate_nice_tree_decomposition(const ColoredGraph& g, const NiceTreeDecomposition& ntd) {
  const int count = static_cast<int>(ntd.nodes.size());
  if (count == 0 || ntd.root != count - 1)
    throw InvalidDecomposition(0, "root must be the last node");
  TreeDecomposition td;
  td.bags.resize(count);
  td.parent.assign(count, -1);
  std::set<Edge> introduced;
  auto fail = [](int node, const std::string& why) {
    throw InvalidDecomposition(0, "node " + std::to_string(node) + ": " + why);
  };
  for (int x = 0; x < count; ++x) {
    const NiceNode& node = ntd.nodes[x];
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) fail(x, "bag not sorted");
    td.bags[x] = node.bag;
    for (int c : node.children) {
      if (c < 0 || c >= x) fail(x, "children must precede their parent");
      if (td.parent[c] != -1) fail(x, "node has two parents");
      td.parent[c] = x;
    }
    auto child_bag = [&](std::size_t i) -> const std::vector<Vertex>& {
      return ntd.nodes[node.children[i]].bag;
    };
    auto in_bag = [&](Vertex v) { return std::binary_search(node.bag.begin(), node.bag.end(), v); };
    switch (node.type) {
      case NiceNodeType::kLeaf:
        if (!node.children.empty() || node.bag != std::vector<Vertex>{node.vertex})
          fail(x, "leaf must hold exactly its vertex");
        break;
      case NiceNodeType::kIntroduceVertex:
      case NiceNodeType::kForget: {
        if (node.children.size() != 1) fail(x, "needs exactly one child");
        const bool intro = node.type == NiceNodeType::kIntroduceVertex;
        const auto& big = intro ? node.bag : child_bag(0);
        const auto& small = intro ? child_bag(0) : node.bag;
        std::vector<Vertex> expect = small;
        if (std::binary_search(small.begin(), small.end(), node.vertex))
          fail(x, "vertex already present");
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != big) fail(x, "bags differ by more than the vertex");
        break;
      }
      case NiceNodeType::kIntroduceEdge: {
        if (node.children.size() != 1 || child_bag(0) != node.bag) fail(x, "bag must equal child bag");
        const auto [u, v] = node.edge;
        if (u >= v || !in_bag(u) || !in_bag(v) || !g.has_edge(u, v))
          fail(x, "introduced edge invalid or outside the bag");
        if (!introduced.insert(node.edge).second) fail(x, "edge introduced twice");
        break;
      }
      case NiceNodeType::kJoin:
        if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag)
          fail(x, "join needs two children with equal bags");
        break;
    }
  }
  if (static_cast<int>(introduced.size()) != g.num_edges())
    throw InvalidDecomposition(2, "not every edge is introduced");
  validate_tree_decomposition(g, td);
}

NiceTreeDecomposition nice_tree_decomposition(const ColoredGraph& g,
                                              const std::optional<TreeDecomposition>& td_in) {
  TreeDecomposition td = td_in ? *td_in : forest_tree_decomposition(g);
  validate_tree_decomposition(g, td);
  for (auto& b : td.bags) std::sort(b.begin(), b.end());

  const auto children = children_of(td);
  const int root = root_of(td);
  const auto order = post_order(children, root);

  // Each edge goes to the highest node containing both endpoints: visit
  // nodes top-down (reverse post-order has parents before children).
  std::vector<std::vector<Edge>> assigned(td.bags.size());
  std::set<Edge> done;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& bag = td.bags[*it];
    for (std::size_t a = 0; a < bag.size(); ++a)
      for (std::size_t b = a + 1; b < bag.size(); ++b)
        if (g.has_edge(bag[a], bag[b]) && done.emplace(bag[a], bag[b]).second)
          assigned[*it].emplace_back(bag[a], bag[b]);
  }

  NiceTreeDecomposition out;
  NiceBuilder build(out);
  std::vector<int> top(td.bags.size(), -1);
  for (int x : order) {
    const auto& bag = td.bags[x];
    std::vector<int> chains;
    for (int c : children[x])
      if (top[c] != -1) chains.push_back(build.convert(top[c], bag));
    int cur = -1;
    if (chains.empty()) {
      if (bag.empty()) continue;
      cur = build.leaf(bag.front());
      for (std::size_t i = 1; i < bag.size(); ++i) cur = build.introduce_vertex(cur, bag[i]);
    } else {
      cur = chains.front();
      for (std::size_t i = 1; i < chains.size(); ++i) cur = build.join(cur, chains[i]);
    }
    for (const auto& e : assigned[x]) cur = build.introduce_edge(cur, e);
    top[x] = cur;
  }
  if (top[root] == -1) throw std::invalid_argument("decomposition of an empty graph");
  out.root = top[root];
  std::size_t widest = 0;
  for (const auto& node : out.nodes) widest = std::max(widest, node.bag.size());
  out.width = static_cast<int>(widest) - 1;
  return out;
}

}  // namespace fcd
