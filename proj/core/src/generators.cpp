#include "fcd/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fcd {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
  // 53-bit uniform in [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

GeneratorClass parse_generator_class(const std::string& text) {
  static const std::pair<const char*, GeneratorClass::Kind> plain[] = {
      {"path", GeneratorClass::kPath},       {"cycle", GeneratorClass::kCycle},
      {"star", GeneratorClass::kStar},       {"caterpillar", GeneratorClass::kCaterpillar},
      {"tree", GeneratorClass::kTree},       {"unicyclic", GeneratorClass::kUnicyclic}};
  for (auto [name, kind] : plain)
    if (text == name) return {kind, 0, 0};
  auto argument = [&](const std::string& prefix) -> std::string {
    if (text.size() > prefix.size() + 2 && text.compare(0, prefix.size() + 1, prefix + "(") == 0 &&
        text.back() == ')')
      return text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
    return {};
  };
  try {
    if (auto arg = argument("bounded_vc"); !arg.empty()) {
      std::size_t used = 0;
      const int b = std::stoi(arg, &used);
      if (used == arg.size() && b >= 1) return GeneratorClass::bounded_vc(b);
    }
    if (auto arg = argument("general"); !arg.empty()) {
      std::size_t used = 0;
      const double p = std::stod(arg, &used);
      if (used == arg.size() && p >= 0 && p <= 1) return GeneratorClass::general(p);
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unknown graph class '" + text + "'");
}

std::string to_string(const GeneratorClass& cls) {
  switch (cls.kind) {
    case GeneratorClass::kPath: return "path";
    case GeneratorClass::kCycle: return "cycle";
    case GeneratorClass::kStar: return "star";
    case GeneratorClass::kCaterpillar: return "caterpillar";
    case GeneratorClass::kTree: return "tree";
    case GeneratorClass::kUnicyclic: return "unicyclic";
    case GeneratorClass::kBoundedVc: return "bounded_vc(" + std::to_string(cls.vc_bound) + ")";
    case GeneratorClass::kGeneral: {
      std::string p = std::to_string(cls.edge_probability);
      while (p.size() > 1 && p.back() == '0' && p[p.size() - 2] != '.') p.pop_back();
      return "general(" + p + ")";
    }
  }
  return "unknown";
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  return perm;
}

std::vector<Edge> relabel_edges(const std::vector<Edge>& edges, const std::vector<int>& perm) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    const int a = perm[u], b = perm[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform_int(rng, 0, v - 1), v);
  return edges;
}

std::vector<Edge> random_caterpillar_edges(int n, std::mt19937_64& rng) {
  if (n < 5) throw std::invalid_argument("caterpillar needs n >= 5");
  const int spine = uniform_int(rng, 2, n - 3);
  std::vector<Edge> edges;
  for (int v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
  int next = spine;
  edges.emplace_back(0, next++);
  edges.emplace_back(spine - 1, next++);
  while (next < n) edges.emplace_back(uniform_int(rng, 0, spine - 1), next++);
  return edges;
}

std::vector<Edge> random_unicyclic_edges(int n, std::mt19937_64& rng) {
  if (n < 4) throw std::invalid_argument("unicyclic graph needs n >= 4");
  while (true) {
    auto edges = random_tree_edges(n, rng);
    std::set<Edge> present(edges.begin(), edges.end());
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!present.count({u, v})) missing.emplace_back(u, v);
    edges.push_back(missing[uniform_below(rng, missing.size())]);
    std::vector<int> degree(n, 0);
    for (auto [u, v] : edges) ++degree[u], ++degree[v];
    if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; })) return edges;
  }
}

std::vector<Edge> random_bounded_vc_edges(int n, int b, std::mt19937_64& rng) {
  if (b < 1 && n > 1) throw std::invalid_argument("bounded_vc needs b >= 1");
  const int s = std::min(b, n);
  std::set<Edge> edges;
  for (int v = 1; v < s; ++v) edges.emplace(uniform_int(rng, 0, v - 1), v);
  for (int v = s; v < n; ++v) edges.emplace(uniform_int(rng, 0, s - 1), v);
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, 0.5)) edges.emplace(u, v);
  return {edges.begin(), edges.end()};
}

std::vector<Edge> random_connected_edges(int n, double p, std::mt19937_64& rng) {
  auto tree = random_tree_edges(n, rng);
  std::set<Edge> edges(tree.begin(), tree.end());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!edges.count({u, v}) && coin(rng, p)) edges.emplace(u, v);
  return {edges.begin(), edges.end()};
}

namespace {

// Spider with three legs of length two plus random attachments; never a
// caterpillar.
std::vector<Edge> random_non_caterpillar_tree(int n, std::mt19937_64& rng) {
  if (n < 7) throw std::invalid_argument("tree (non-caterpillar) needs n >= 7");
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  for (int v = 7; v < n; ++v) edges.emplace_back(uniform_int(rng, 0, v - 1), v);
  return edges;
}

}  // namespace

Instance gen_random_instance(const GeneratorClass& cls, int n, int num_colors, int k,
                             std::int64_t ell, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (num_colors < 1) throw std::invalid_argument("num_colors must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  switch (cls.kind) {
    case GeneratorClass::kPath:
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case GeneratorClass::kCycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(0, n - 1);
      break;
    case GeneratorClass::kStar:
      if (n < 4) throw std::invalid_argument("star needs n >= 4");
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case GeneratorClass::kCaterpillar: edges = random_caterpillar_edges(n, rng); break;
    case GeneratorClass::kTree: edges = random_non_caterpillar_tree(n, rng); break;
    case GeneratorClass::kUnicyclic: edges = random_unicyclic_edges(n, rng); break;
    case GeneratorClass::kBoundedVc: edges = random_bounded_vc_edges(n, cls.vc_bound, rng); break;
    case GeneratorClass::kGeneral:
      if (cls.edge_probability < 0 || cls.edge_probability > 1)
        throw std::invalid_argument("edge probability must lie in [0, 1]");
      edges = random_connected_edges(n, cls.edge_probability, rng);
      break;
  }
  const auto perm = random_permutation(n, rng);
  std::vector<Color> colors(n);
  for (auto& c : colors) c = uniform_int(rng, 0, num_colors - 1);
  return Instance(ColoredGraph(num_colors, std::move(colors), relabel_edges(edges, perm)), k, ell);
}

void GridTilingInstance::validate() const {
  if (t < 1 || m < 1) throw std::invalid_argument("grid tiling needs t >= 1 and m >= 1");
  if (n < 3) throw std::invalid_argument("grid tiling needs n > 2 tiles per cell");
  if (static_cast<int>(cells.size()) != t * t)
    throw std::invalid_argument("grid tiling needs t*t cells");
  long long x_sum = -1, y_sum = -1;
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      const auto& tiles = cell(i, j);
      const std::string where = "cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (static_cast<int>(tiles.size()) != n)
        throw std::invalid_argument(where + " must hold exactly " + std::to_string(n) + " tiles");
      std::set<std::pair<int, int>> distinct(tiles.begin(), tiles.end());
      if (distinct.size() != tiles.size()) throw std::invalid_argument(where + " repeats a tile");
      long long xs = 0, ys = 0;
      for (auto [x, y] : tiles) {
        if (x < 1 || x > m || y < 1 || y > m)
          throw std::invalid_argument(where + " has a tile outside [1," + std::to_string(m) + "]");
        xs += x;
        ys += y;
      }
      if (x_sum == -1) {
        x_sum = xs;
        y_sum = ys;
      } else if (xs != x_sum) {
        throw std::invalid_argument(where + ": first entries sum to " + std::to_string(xs) +
                                    ", expected " + std::to_string(x_sum));
      } else if (ys != y_sum) {
        throw std::invalid_argument(where + ": second entries sum to " + std::to_string(ys) +
                                    ", expected " + std::to_string(y_sum));
      }
    }
  }
}

bool GridTilingInstance::is_solution(const std::vector<std::pair<int, int>>& sel) const {
  if (static_cast<int>(sel.size()) != t * t) return false;
  auto at = [&](int i, int j) { return sel[static_cast<std::size_t>((i - 1) * t + (j - 1))]; };
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      const auto& tiles = cell(i, j);
      if (std::find(tiles.begin(), tiles.end(), at(i, j)) == tiles.end()) return false;
      if (at(i, j).first != at(i % t + 1, j).first) return false;
      if (at(i, j).second != at(i, j % t + 1).second) return false;
    }
  }
  return true;
}

GridTilingReduction reduce_grid_tiling(const GridTilingInstance& gt) {
  gt.validate();
  GridTilingReduction r;
  r.source = gt;
  const std::int64_t t = gt.t, m = gt.m, n = gt.n;
  r.W = 5 * n * (t * t + t) + 1;
  r.Z = 2 * (n - 1) * 4 * m * r.W;
  const std::int64_t h = r.Z / (2 * (n - 1));
  const int num_colors = static_cast<int>(3 + 3 * t * t);

  std::vector<Color> colors;
  std::vector<Edge> edges;
  auto add_vertex = [&](Color c) {
    colors.push_back(c);
    return static_cast<Vertex>(colors.size() - 1);
  };
  auto add_leaves = [&](Vertex hub, Color c, std::int64_t count) {
    if (count < 0) throw std::logic_error("negative leaf count");
    for (std::int64_t q = 0; q < count; ++q) edges.emplace_back(hub, add_vertex(c));
  };

  r.center = add_vertex(GridTilingReduction::kColorCStar);
  add_leaves(r.center, GridTilingReduction::kColorC, r.Z);
  add_leaves(r.center, GridTilingReduction::kColorCPrime, r.Z);
  r.star_ranges.resize(static_cast<std::size_t>(t * t));
  for (int i = 1; i <= gt.t; ++i) {
    for (int j = 1; j <= gt.t; ++j) {
      const int ip = i % gt.t + 1;
      const int jp = j % gt.t + 1;
      for (auto [x, y] : gt.cell(i, j)) {
        const Vertex star = add_vertex(GridTilingReduction::kColorCStar);
        edges.emplace_back(r.center, star);
        const std::int64_t d_here = h + r.W * x - r.f(i, j);
        const std::int64_t b_here = h + r.W * y - r.g(i, j);
        add_leaves(star, r.color_d(i, j), d_here);
        add_leaves(star, r.color_d(ip, j), h - r.W * x - r.f(ip, j));
        add_leaves(star, r.color_b(i, j), b_here);
        add_leaves(star, r.color_b(i, jp), h - r.W * y - r.g(i, jp));
        add_leaves(star, r.color_c(i, j), std::max(d_here, b_here));
        r.star_ranges[static_cast<std::size_t>((i - 1) * gt.t + (j - 1))].emplace_back(
            star, static_cast<Vertex>(colors.size()));
      }
    }
  }
  if (n * t * t + 1 > r.Z) throw std::logic_error("too many star centers for Z");
  r.instance = Instance(ColoredGraph(num_colors, std::move(colors), edges),
                        static_cast<int>(t * t + 1), 0);
  return r;
}

Districting GridTilingReduction::witness(const std::vector<std::pair<int, int>>& selection) const {
  const int t = source.t;
  if (static_cast<int>(selection.size()) != t * t)
    throw std::invalid_argument("selection needs one tile per cell");
  std::vector<int> assignment(instance.graph.n(), 0);
  for (int cell = 0; cell < t * t; ++cell) {
    const auto& tiles = source.cells[cell];
    const auto it = std::find(tiles.begin(), tiles.end(), selection[cell]);
    if (it == tiles.end()) throw std::invalid_argument("selected tile is not in its cell");
    const auto [begin, end] = star_ranges[cell][it - tiles.begin()];
    for (Vertex v = begin; v < end; ++v) assignment[v] = cell + 1;
  }
  return Districting(std::move(assignment), t * t + 1);
}

void NaeInstance::validate() const {
  if (num_vars < 1) throw std::invalid_argument("NAE-3-SAT needs at least one variable");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto& cl = clauses[j];
    for (int lit : cl)
      if (lit == 0 || lit > num_vars || lit < -num_vars)
        throw std::invalid_argument("clause " + std::to_string(j + 1) + " has literal " +
                                    std::to_string(lit) + " out of range");
    if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
      throw std::invalid_argument("clause " + std::to_string(j + 1) +
                                  " does not have three distinct literals");
  }
}

bool NaeInstance::is_solution(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != num_vars) return false;
  for (const auto& cl : clauses) {
    int trues = 0;
    for (int lit : cl) trues += assignment[std::abs(lit) - 1] == (lit > 0);
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

NaeReduction reduce_nae3sat(const NaeInstance& sat) {
  sat.validate();
  NaeReduction r;
  r.source = sat;
  const std::int64_t nv = sat.num_vars;
  const std::int64_t nc = static_cast<std::int64_t>(sat.clauses.size());
  r.Z = 2 * nv * nc + 1;
  const int num_colors = static_cast<int>(3 + nv + nc);

  std::vector<Color> colors(2 + 2 * nv, NaeReduction::kColorC);
  std::vector<Edge> edges;
  auto add_leaves = [&](Vertex hub, Color c, std::int64_t count) {
    for (std::int64_t q = 0; q < count; ++q) {
      colors.push_back(c);
      edges.emplace_back(hub, static_cast<Vertex>(colors.size() - 1));
    }
  };
  for (int i = 1; i <= sat.num_vars; ++i)
    for (int lit : {i, -i}) {
      edges.emplace_back(NaeReduction::kCentral1, r.literal_vertex(lit));
      edges.emplace_back(NaeReduction::kCentral2, r.literal_vertex(lit));
    }
  for (Vertex central : {NaeReduction::kCentral1, NaeReduction::kCentral2}) {
    add_leaves(central, NaeReduction::kColorCPrime, 3 * r.Z);
    add_leaves(central, NaeReduction::kColorCDoublePrime, 3 * r.Z);
  }
  for (int i = 1; i <= sat.num_vars; ++i)
    for (int lit : {i, -i}) add_leaves(r.literal_vertex(lit), r.color_var(i), 3 * r.Z - i);
  for (int j = 1; j <= static_cast<int>(nc); ++j)
    for (int lit : sat.clauses[j - 1]) add_leaves(r.literal_vertex(lit), r.color_clause(j), r.Z + j);

  r.instance = Instance(ColoredGraph(num_colors, std::move(colors), edges), 2, 0);
  return r;
}

Districting NaeReduction::witness(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != source.num_vars)
    throw std::invalid_argument("assignment needs one value per variable");
  const auto& g = instance.graph;
  std::vector<int> side(g.n(), 1);
  std::vector<Vertex> hubs{kCentral1};
  for (int i = 1; i <= source.num_vars; ++i)
    hubs.push_back(literal_vertex(assignment[i - 1] ? i : -i));
  for (Vertex hub : hubs) {
    side[hub] = 0;
    for (Vertex w : g.neighbors(hub))
      if (g.degree(w) == 1) side[w] = 0;
  }
  return Districting(std::move(side), 2);
}

Instance reduce_pbcp(int n, const std::vector<Edge>& edges, Vertex v, Vertex v2) {
  if (n < 1 || n % 2 != 0) throw std::invalid_argument("balanced partition needs an even n");
  if (v == v2) throw std::invalid_argument("anchor vertices must differ");
  if (v < 0 || v >= n || v2 < 0 || v2 >= n)
    throw std::invalid_argument("anchor vertex out of range");
  std::vector<Color> colors(n, 0);
  std::vector<Edge> all = edges;
  for (int q = 0; q < n; ++q) {
    colors.push_back(1);
    all.emplace_back(q < n / 2 ? v : v2, n + q);
  }
  return Instance(ColoredGraph(2, std::move(colors), all), 2, 0);
}

}  // namespace fcd
