#include "fcd/solvers_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "fcd/classify.hpp"

namespace fcd {

StarInterval star_interval(const ColorVector& x, const ColorVector& y, std::int64_t ell) {
  if (x.size() != y.size()) throw std::invalid_argument("color vector length mismatch");
  const ColorVector total = x + y;
  const std::int64_t leaves = y.total();
  StarInterval out;

  if (ell == 0) {
    if (mov(total) == 0) out = {true, 1, 1};
    return out;
  }
  if (total.size() == 1) {
    const std::int64_t lo = std::max<std::int64_t>(1, total[0] - ell + 1);
    const std::int64_t hi = leaves + 1;
    if (lo <= hi) out = {true, lo, hi};
    return out;
  }

  const auto tc = total.counts();
  const std::size_t c1 = top_color(tc);
  std::size_t c2 = c1 == 0 ? 1 : 0;
  for (std::size_t c = 0; c < tc.size(); ++c)
    if (c != c1 && tc[c] > tc[c2]) c2 = c;
  if (x[c1] > total[c2] + ell) return out;

  const std::size_t x1 = top_color(x.counts());
  std::optional<std::size_t> x2;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (c == x1 || total[c] < x[x1] - ell) continue;
    if (!x2 || x[c] > x[*x2]) x2 = c;
  }
  if (!x2) return out;

  const std::int64_t b_l = std::max<std::int64_t>(0, total[c1] - total[c2] - ell);
  const std::int64_t b_u = std::max<std::int64_t>(0, x[x1] - x[*x2] - ell);
  const std::int64_t lo = b_l + 1;
  const std::int64_t hi = leaves + 1 - b_u;
  if (lo <= hi) out = {true, lo, hi};
  return out;
}

StarInterval star_interval(const ColorVector& x, std::span<const Color> y_colors,
                           std::int64_t ell) {
  ColorVector y(x.size());
  for (Color c : y_colors) {
    if (c < 0 || static_cast<std::size_t>(c) >= x.size())
      throw std::invalid_argument("leaf color out of range");
    ++y[c];
  }
  return star_interval(x, y, ell);
}

std::optional<ColorVector> star_center_fill(const ColorVector& x, const ColorVector& y,
                                            std::int64_t k, std::int64_t ell) {
  if (x.size() != y.size()) throw std::invalid_argument("color vector length mismatch");
  const std::int64_t keep = y.total() - (k - 1);
  if (k < 1 || keep < 0) return std::nullopt;
  if (k >= 2 && ell < 1) return std::nullopt;
  const std::size_t colors = x.size();

  if (colors == 1) {
    if (x[0] + keep > ell) return std::nullopt;
    return ColorVector(std::vector<std::int64_t>{keep});
  }

  for (std::size_t a = 0; a < colors; ++a) {
    std::int64_t floor = x[a];
    for (std::size_t c = 0; c < colors; ++c)
      if (c != a) floor = std::max(floor, x[c]);
    for (std::int64_t ta = floor; ta <= x[a] + y[a]; ++ta) {
      const std::int64_t rest = keep - (ta - x[a]);
      if (rest < 0) break;
      std::vector<std::int64_t> up(colors, 0);
      std::int64_t up_total = 0;
      for (std::size_t c = 0; c < colors; ++c) {
        if (c == a) continue;
        up[c] = std::min(x[c] + y[c], ta) - x[c];
        up_total += up[c];
      }
      if (rest > up_total) continue;
      for (std::size_t b = 0; b < colors; ++b) {
        if (b == a) continue;
        const std::int64_t need = std::max<std::int64_t>(0, ta - ell - x[b]);
        if (need > up[b] || need > rest) continue;
        ColorVector fill(colors);
        fill[a] = ta - x[a];
        fill[b] = need;
        std::int64_t left = rest - need;
        for (std::size_t c = 0; c < colors && left > 0; ++c) {
          if (c == a) continue;
          const std::int64_t add = std::min(left, up[c] - fill[c]);
          fill[c] += add;
          left -= add;
        }
        return fill;
      }
    }
  }
  return std::nullopt;
}

SegmentFairness::SegmentFairness(const ColoredGraph& graph, std::span<const Vertex> order,
                                 std::int64_t ell)
    : n_(static_cast<int>(order.size())),
      bits_(static_cast<std::size_t>(order.size()) * order.size(), false) {
  const bool single = graph.num_colors() == 1;
  std::vector<std::int64_t> counts(graph.num_colors());
  for (int i = 0; i < n_; ++i) {
    std::fill(counts.begin(), counts.end(), 0);
    int top_color_id = -1;
    std::int64_t top = 0;
    std::int64_t second = 0;
    for (int j = i; j < n_; ++j) {
      const Color c = graph.color(order[j]);
      const std::int64_t value = ++counts[c];
      if (c == top_color_id) {
        top = value;
      } else if (value > top) {
        second = top;
        top = value;
        top_color_id = c;
      } else {
        second = std::max(second, value);
      }
      const std::int64_t margin = single ? top : top - second;
      bits_[static_cast<std::size_t>(i) * n_ + j] = margin <= ell;
    }
  }
}

FeasibilityTable::FeasibilityTable(const SegmentFairness& fairness, int max_k)
    : fairness_(fairness), max_k_(max_k) {
  const int n = fairness.size();
  cells_.assign(n + 1, std::vector<char>(max_k + 1, 0));
  cells_[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int t = 1; t <= std::min(i, max_k); ++t) {
      for (int j = t - 1; j < i; ++j) {
        ++work_;
        if (cells_[j][t - 1] && fairness.fair(j, i - 1)) {
          cells_[i][t] = 1;
          break;
        }
      }
    }
  }
}

std::vector<int> FeasibilityTable::backtrace(int t) const {
  int i = fairness_.size();
  if (t < 0 || t > max_k_ || !cells_[i][t]) return {};
  std::vector<int> bounds{i};
  while (t > 0) {
    for (int j = t - 1; j < i; ++j) {
      if (cells_[j][t - 1] && fairness_.fair(j, i - 1)) {
        i = j;
        break;
      }
    }
    --t;
    bounds.push_back(i);
  }
  std::reverse(bounds.begin(), bounds.end());
  return bounds;
}

namespace {

void require_permutation(const ColoredGraph& g, std::span<const Vertex> order, const char* what) {
  if (static_cast<int>(order.size()) != g.n())
    throw std::invalid_argument(std::string(what) + " must list every vertex once");
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= g.n() || seen[v])
      throw std::invalid_argument(std::string(what) + " must list every vertex once");
    seen[v] = 1;
  }
}

void require_path_order(const ColoredGraph& g, std::span<const Vertex> order) {
  require_permutation(g, order, "path order");
  if (g.num_edges() != g.n() - 1) throw std::invalid_argument("graph is not a path");
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!g.has_edge(order[i], order[i + 1]))
      throw std::invalid_argument("path order has a non-edge between consecutive vertices");
}

Districting segments_to_districting(int n, std::span<const Vertex> order,
                                    const std::vector<int>& bounds) {
  std::vector<int> assignment(n, 0);
  const int t = static_cast<int>(bounds.size()) - 1;
  for (int d = 0; d < t; ++d)
    for (int i = bounds[d]; i < bounds[d + 1]; ++i) assignment[order[i]] = d;
  return Districting(std::move(assignment), t);
}

}  // namespace

SolveResult solve_path(const Instance& instance, std::span<const Vertex> order) {
  require_path_order(instance.graph, order);
  SegmentFairness fairness(instance.graph, order, instance.ell);
  FeasibilityTable table(fairness, instance.k);
  SolveResult result;
  result.work = table.work();
  const auto bounds = table.backtrace(instance.k);
  if (!bounds.empty()) {
    result.feasible = true;
    result.witness = segments_to_districting(instance.graph.n(), order, bounds);
  }
  return result;
}

SolveResult solve_cycle(const Instance& instance, std::span<const Vertex> order) {
  const auto& g = instance.graph;
  require_permutation(g, order, "cycle order");
  const int n = g.n();
  if (n < 3 || g.num_edges() != n) throw std::invalid_argument("graph is not a cycle");
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % n]))
      throw std::invalid_argument("cycle order has a non-edge between consecutive vertices");

  SolveResult result;
  if (instance.k == 1) {
    result.work = n;
    if (mov(color_vector(g, order)) <= instance.ell) {
      result.feasible = true;
      result.witness = Districting(std::vector<int>(n, 0), 1);
    }
    return result;
  }
  std::vector<Vertex> rotated(n);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) rotated[i] = order[(r + i) % n];
    SegmentFairness fairness(g, rotated, instance.ell);
    FeasibilityTable table(fairness, instance.k);
    result.work += table.work();
    const auto bounds = table.backtrace(instance.k);
    if (!bounds.empty()) {
      result.feasible = true;
      result.witness = segments_to_districting(n, rotated, bounds);
      return result;
    }
  }
  return result;
}

namespace {

// Builds the districts of a star-like piece: `center` stays together with
// fill[c] leaves of each color c (lowest ids first), every other leaf alone.
void assign_star_piece(const ColoredGraph& g, const std::vector<Vertex>& center,
                       const std::vector<Vertex>& leaves, const ColorVector& fill,
                       std::vector<int>& assignment, int& next_district) {
  const int home = next_district++;
  for (Vertex v : center) assignment[v] = home;
  std::vector<Vertex> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  ColorVector left = fill;
  for (Vertex v : sorted) {
    const Color c = g.color(v);
    if (left[c] > 0) {
      --left[c];
      assignment[v] = home;
    } else {
      assignment[v] = next_district++;
    }
  }
}

Vertex star_center(const ColoredGraph& g) {
  const int n = g.n();
  if (n == 0 || g.num_edges() != n - 1) throw std::invalid_argument("graph is not a star");
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return v;
  throw std::invalid_argument("graph is not a star");
}

struct CaterpillarLayout {
  std::vector<std::vector<Vertex>> leaves;  // per spine index
};

CaterpillarLayout caterpillar_layout(const ColoredGraph& g, std::span<const Vertex> spine) {
  const int n = g.n();
  if (spine.empty() || g.num_edges() != n - 1)
    throw std::invalid_argument("graph is not a caterpillar");
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const Vertex v = spine[i];
    if (v < 0 || v >= n || index[v] != -1) throw std::invalid_argument("invalid spine");
    index[v] = static_cast<int>(i);
    if (i > 0 && !g.has_edge(spine[i - 1], v))
      throw std::invalid_argument("spine vertices are not consecutive on a path");
  }
  CaterpillarLayout layout;
  layout.leaves.resize(spine.size());
  for (Vertex v = 0; v < n; ++v) {
    if (index[v] != -1) continue;
    if (g.degree(v) != 1 || index[g.neighbors(v)[0]] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf of the spine");
    layout.leaves[index[g.neighbors(v)[0]]].push_back(v);
  }
  return layout;
}

struct CaterpillarTable {
  int p = 0;
  std::vector<std::vector<StarInterval>> segment;  // [j][i]: spine j..i
  std::vector<std::vector<char>> cells;            // [prefix][t]
  std::uint64_t work = 0;
};

CaterpillarTable caterpillar_table(const ColoredGraph& g, std::span<const Vertex> spine,
                                   const CaterpillarLayout& layout, std::int64_t ell,
                                   int max_k) {
  CaterpillarTable tab;
  const int p = static_cast<int>(spine.size());
  tab.p = p;
  tab.segment.assign(p, std::vector<StarInterval>(p));
  for (int j = 0; j < p; ++j) {
    ColorVector x(g.num_colors());
    ColorVector y(g.num_colors());
    for (int i = j; i < p; ++i) {
      ++x[g.color(spine[i])];
      for (Vertex leaf : layout.leaves[i]) ++y[g.color(leaf)];
      tab.segment[j][i] = star_interval(x, y, ell);
      ++tab.work;
    }
  }
  tab.cells.assign(p + 1, std::vector<char>(max_k + 1, 0));
  tab.cells[0][0] = 1;
  for (int i = 1; i <= p; ++i) {
    for (int j = 0; j < i; ++j) {
      const StarInterval& s = tab.segment[j][i - 1];
      if (!s.feasible) continue;
      for (int t0 = 0; t0 <= max_k; ++t0) {
        if (!tab.cells[j][t0]) continue;
        const std::int64_t hi = std::min<std::int64_t>(s.hi, max_k - t0);
        for (std::int64_t extra = s.lo; extra <= hi; ++extra) {
          ++tab.work;
          tab.cells[i][t0 + extra] = 1;
        }
      }
    }
  }
  return tab;
}

}  // namespace

SolveResult solve_star(const Instance& instance) {
  const auto& g = instance.graph;
  const Vertex center = star_center(g);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.n(); ++v)
    if (v != center) leaves.push_back(v);
  ColorVector x(g.num_colors());
  ++x[g.color(center)];
  const ColorVector y = color_vector(g, leaves);

  SolveResult result;
  result.work = static_cast<std::uint64_t>(g.n());
  if (!star_interval(x, y, instance.ell).contains(instance.k)) return result;
  const auto fill = star_center_fill(x, y, instance.k, instance.ell);
  if (!fill) throw std::logic_error("star interval and center fill disagree");
  std::vector<int> assignment(g.n(), 0);
  int next = 0;
  assign_star_piece(g, {center}, leaves, *fill, assignment, next);
  result.feasible = true;
  result.witness = Districting(std::move(assignment), instance.k);
  return result;
}

SolveResult solve_caterpillar(const Instance& instance, std::span<const Vertex> spine) {
  const auto& g = instance.graph;
  const auto layout = caterpillar_layout(g, spine);
  const auto tab = caterpillar_table(g, spine, layout, instance.ell, instance.k);
  SolveResult result;
  result.work = tab.work;
  if (!tab.cells[tab.p][instance.k]) return result;

  std::vector<int> assignment(g.n(), 0);
  int next = 0;
  int i = tab.p;
  int t = instance.k;
  while (i > 0) {
    bool stepped = false;
    for (int j = 0; j < i && !stepped; ++j) {
      const StarInterval& s = tab.segment[j][i - 1];
      if (!s.feasible) continue;
      for (std::int64_t extra = s.lo; extra <= std::min<std::int64_t>(s.hi, t); ++extra) {
        if (!tab.cells[j][t - extra]) continue;
        std::vector<Vertex> center(spine.begin() + j, spine.begin() + i);
        std::vector<Vertex> leaves;
        for (int q = j; q < i; ++q)
          leaves.insert(leaves.end(), layout.leaves[q].begin(), layout.leaves[q].end());
        const auto fill = star_center_fill(color_vector(g, center), color_vector(g, leaves),
                                           extra, instance.ell);
        if (!fill) throw std::logic_error("star interval and center fill disagree");
        assign_star_piece(g, center, leaves, *fill, assignment, next);
        i = j;
        t -= static_cast<int>(extra);
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("caterpillar backtrace failed");
  }
  result.feasible = true;
  result.witness = Districting(std::move(assignment), instance.k);
  return result;
}

std::vector<bool> path_feasible_counts(const ColoredGraph& graph, std::span<const Vertex> order,
                                       std::int64_t ell, int max_k) {
  require_path_order(graph, order);
  SegmentFairness fairness(graph, order, ell);
  FeasibilityTable table(fairness, max_k);
  std::vector<bool> out(max_k + 1);
  for (int t = 0; t <= max_k; ++t) out[t] = table.at(graph.n(), t);
  return out;
}

std::vector<bool> caterpillar_feasible_counts(const ColoredGraph& graph,
                                              std::span<const Vertex> spine, std::int64_t ell,
                                              int max_k) {
  const auto layout = caterpillar_layout(graph, spine);
  const auto tab = caterpillar_table(graph, spine, layout, ell, max_k);
  std::vector<bool> out(max_k + 1);
  for (int t = 0; t <= max_k; ++t) out[t] = tab.cells[tab.p][t];
  return out;
}

std::optional<std::vector<int>> solve_disjoint_union(const std::vector<std::vector<bool>>& tables,
                                                     int k) {
  const int parts = static_cast<int>(tables.size());
  if (k < parts || k < 0) return std::nullopt;
  std::vector<std::vector<char>> reach(parts + 1, std::vector<char>(k + 1, 0));
  reach[0][0] = 1;
  for (int i = 1; i <= parts; ++i) {
    const auto& h = tables[i - 1];
    for (int t = 0; t <= k; ++t) {
      if (!reach[i - 1][t]) continue;
      for (int j = 1; j < static_cast<int>(h.size()) && t + j <= k; ++j)
        if (h[j]) reach[i][t + j] = 1;
    }
  }
  if (!reach[parts][k]) return std::nullopt;
  std::vector<int> counts(parts, 0);
  int t = k;
  for (int i = parts; i >= 1; --i) {
    const auto& h = tables[i - 1];
    for (int j = 1; j < static_cast<int>(h.size()) && j <= t; ++j) {
      if (h[j] && reach[i - 1][t - j]) {
        counts[i - 1] = j;
        t -= j;
        break;
      }
    }
  }
  return counts;
}

SolveResult solve_pathwidth_one(const Instance& instance) {
  const auto& g = instance.graph;
  const auto comps = connected_components(g);
  std::vector<ColoredGraph> pieces;
  std::vector<std::vector<Vertex>> spines;
  std::vector<std::vector<bool>> tables;
  SolveResult result;
  for (const auto& comp : comps) {
    pieces.push_back(induced_subgraph(g, comp));
    const auto report = classify_graph(pieces.back());
    if (report.class_tag != GraphClass::kPath && report.class_tag != GraphClass::kStar &&
        report.class_tag != GraphClass::kCaterpillar)
      throw std::invalid_argument("component is not a caterpillar");
    spines.push_back(*report.spine);
    tables.push_back(caterpillar_feasible_counts(pieces.back(), spines.back(), instance.ell,
                                                 std::min<int>(instance.k, pieces.back().n())));
    result.work += static_cast<std::uint64_t>(comp.size()) * comp.size();
  }
  const auto counts = solve_disjoint_union(tables, instance.k);
  if (!counts) return result;

  std::vector<int> assignment(g.n(), 0);
  int offset = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Instance sub(pieces[i], (*counts)[i], instance.ell);
    const auto part = solve_caterpillar(sub, spines[i]);
    if (!part.feasible) throw std::logic_error("component table and solver disagree");
    for (std::size_t v = 0; v < comps[i].size(); ++v)
      assignment[comps[i][v]] = offset + part.witness->district_of(static_cast<int>(v));
    offset += (*counts)[i];
  }
  result.feasible = true;
  result.witness = Districting(std::move(assignment), instance.k);
  return result;
}

}  // namespace fcd
