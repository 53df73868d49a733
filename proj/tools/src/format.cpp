#include "fcd/cli/format.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace fcd::cli {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens[0].front() == '#') continue;
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::int64_t integer(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size())
    throw FormatError(line.number, std::string("missing ") + what);
  const auto tok = line.tokens[index];
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError(line.number, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return value;
}

int small(const Line& line, std::size_t index, const char* what, std::int64_t lo,
          std::int64_t hi) {
  const std::int64_t v = integer(line, index, what);
  if (v < lo || v > hi)
    throw FormatError(line.number, std::string(what) + " " + std::to_string(v) +
                                       " out of range [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw FormatError(line.number, "expected " + std::to_string(n - 1) + " fields after '" +
                                       std::string(line.tokens[0]) + "'");
}

constexpr std::int64_t kMaxVertices = 50'000'000;

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw FormatError(0, "empty input: missing 'p fcd' header");
  const Line& head = lines[0];
  if (head.tokens.size() < 2 || head.tokens[0] != "p" || head.tokens[1] != "fcd")
    throw FormatError(head.number, "expected header 'p fcd <n> <m> <num_colors> <k> <ell>'");
  expect_arity(head, 7);
  const int n = small(head, 2, "n", 1, kMaxVertices);
  const std::int64_t m = integer(head, 3, "m");
  if (m < 0 || m > static_cast<std::int64_t>(n) * (n - 1) / 2)
    throw FormatError(head.number, "m " + std::to_string(m) + " impossible for n " + std::to_string(n));
  const int num_colors = small(head, 4, "num_colors", 1, kMaxVertices);
  const int k = small(head, 5, "k", 1, n);
  const std::int64_t ell = integer(head, 6, "ell");
  if (ell < 0) throw FormatError(head.number, "ell must be non-negative");

  std::vector<Color> colors(n, -1);
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  int color_lines = 0;
  std::size_t i = 1;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto tag = line.tokens[0];
    if (tag == "c") {
      expect_arity(line, 3);
      const int v = small(line, 1, "vertex", 0, n - 1);
      const int c = small(line, 2, "color", 0, num_colors - 1);
      if (colors[v] != -1) throw FormatError(line.number, "vertex " + std::to_string(v) + " colored twice");
      colors[v] = c;
      ++color_lines;
    } else if (tag == "e") {
      expect_arity(line, 3);
      const int u = small(line, 1, "vertex", 0, n - 1);
      const int v = small(line, 2, "vertex", 0, n - 1);
      if (u >= v) throw FormatError(line.number, "edge endpoints must satisfy u < v");
      if (!seen_edges.insert({u, v}).second)
        throw FormatError(line.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      edges.emplace_back(u, v);
    } else if (tag == "td") {
      break;
    } else {
      throw FormatError(line.number, "unexpected line type '" + std::string(tag) + "'");
    }
  }
  if (color_lines != n)
    throw FormatError(0, "expected " + std::to_string(n) + " color lines, found " + std::to_string(color_lines));
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw FormatError(0, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));

  ParsedInstance out;
  out.instance = Instance(ColoredGraph(num_colors, std::move(colors), edges), k, ell);
  if (i == lines.size()) return out;

  const Line& td_head = lines[i];
  expect_arity(td_head, 3);
  const int width = small(td_head, 1, "width", -1, n);
  const int nodes = small(td_head, 2, "num_nodes", 1, kMaxVertices);
  TreeDecomposition td;
  td.bags.resize(nodes);
  td.parent.assign(nodes, -2);
  ++i;
  int node_lines = 0;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "b") throw FormatError(line.number, "expected 'b' line in td block");
    if (line.tokens.size() < 3) throw FormatError(line.number, "'b' needs id and parent");
    const int id = small(line, 1, "node id", 0, nodes - 1);
    const int parent = small(line, 2, "parent", -1, nodes - 1);
    if (td.parent[id] != -2) throw FormatError(line.number, "node " + std::to_string(id) + " listed twice");
    td.parent[id] = parent;
    for (std::size_t t = 3; t < line.tokens.size(); ++t)
      td.bags[id].push_back(small(line, t, "vertex", 0, n - 1));
    std::sort(td.bags[id].begin(), td.bags[id].end());
    if (std::adjacent_find(td.bags[id].begin(), td.bags[id].end()) != td.bags[id].end())
      throw FormatError(line.number, "repeated vertex in bag");
    ++node_lines;
  }
  if (node_lines != nodes)
    throw FormatError(0, "expected " + std::to_string(nodes) + " bag lines, found " + std::to_string(node_lines));
  if (td.width() != width)
    throw FormatError(td_head.number, "declared width " + std::to_string(width) + " but bags give " +
                                          std::to_string(td.width()));
  validate_tree_decomposition(out.instance.graph, td);
  out.td = std::move(td);
  return out;
}

std::string write_instance(const Instance& instance, const TreeDecomposition* td) {
  const auto& g = instance.graph;
  std::ostringstream os;
  const auto edges = g.edges();
  os << "p fcd " << g.n() << ' ' << edges.size() << ' ' << g.num_colors() << ' ' << instance.k
     << ' ' << instance.ell << '\n';
  for (Vertex v = 0; v < g.n(); ++v) os << "c " << v << ' ' << g.color(v) << '\n';
  for (auto [u, v] : edges) os << "e " << u << ' ' << v << '\n';
  if (td) {
    os << "td " << td->width() << ' ' << td->bags.size() << '\n';
    for (std::size_t id = 0; id < td->bags.size(); ++id) {
      auto bag = td->bags[id];
      std::sort(bag.begin(), bag.end());
      os << "b " << id << ' ' << td->parent[id];
      for (Vertex v : bag) os << ' ' << v;
      os << '\n';
    }
  }
  return os.str();
}

Districting parse_solution(std::string_view text, int n) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw FormatError(0, "empty input: missing 's fcd' header");
  const Line& head = lines[0];
  if (head.tokens.size() < 2 || head.tokens[0] != "s" || head.tokens[1] != "fcd")
    throw FormatError(head.number, "expected header 's fcd <k>'");
  expect_arity(head, 3);
  const int k = small(head, 2, "k", 1, std::max(n, 1));
  std::vector<int> assignment(n, -1);
  std::vector<char> listed(k, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "d") throw FormatError(line.number, "expected 'd' line");
    if (line.tokens.size() < 2) throw FormatError(line.number, "'d' needs a district id");
    const int id = small(line, 1, "district id", 0, k - 1);
    if (listed[id]) throw FormatError(line.number, "district " + std::to_string(id) + " listed twice");
    listed[id] = 1;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      const int v = small(line, t, "vertex", 0, n - 1);
      if (assignment[v] != -1)
        throw FormatError(line.number, "vertex " + std::to_string(v) + " assigned twice");
      assignment[v] = id;
    }
  }
  for (int id = 0; id < k; ++id)
    if (!listed[id]) throw FormatError(0, "district " + std::to_string(id) + " missing");
  for (Vertex v = 0; v < n; ++v)
    if (assignment[v] == -1) throw FormatError(0, "vertex " + std::to_string(v) + " not assigned");
  return Districting(std::move(assignment), k);
}

std::string write_solution(const Districting& d) {
  std::ostringstream os;
  os << "s fcd " << d.k() << '\n';
  const auto sets = d.districts();
  for (std::size_t id = 0; id < sets.size(); ++id) {
    os << "d " << id;
    for (Vertex v : sets[id]) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

GridTilingBlock parse_grid_tiling(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "grid")
    throw FormatError(lines.empty() ? 0 : lines[0].number, "expected header 'grid <t> <m> <n>'");
  expect_arity(lines[0], 4);
  GridTilingBlock out;
  auto& gt = out.instance;
  gt.t = small(lines[0], 1, "t", 1, 1000);
  gt.m = small(lines[0], 2, "m", 1, 1'000'000);
  gt.n = small(lines[0], 3, "n", 1, 1'000'000);
  gt.cells.assign(static_cast<std::size_t>(gt.t) * gt.t, {});
  std::map<int, std::pair<int, int>> chosen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto tag = line.tokens[0];
    if (tag != "tile" && tag != "select")
      throw FormatError(line.number, "expected 'tile' or 'select' line");
    expect_arity(line, 5);
    const int r = small(line, 1, "row", 1, gt.t);
    const int c = small(line, 2, "column", 1, gt.t);
    const int x = small(line, 3, "x", 1, gt.m);
    const int y = small(line, 4, "y", 1, gt.m);
    const int cell = (r - 1) * gt.t + (c - 1);
    if (tag == "tile") {
      gt.cells[cell].emplace_back(x, y);
    } else if (!chosen.emplace(cell, std::make_pair(x, y)).second) {
      throw FormatError(line.number, "cell selected twice");
    }
  }
  try {
    gt.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(0, e.what());
  }
  if (!chosen.empty()) {
    if (static_cast<int>(chosen.size()) != gt.t * gt.t)
      throw FormatError(0, "selection must pick one tile per cell");
    std::vector<std::pair<int, int>> sel;
    for (const auto& [cell, tile] : chosen) sel.push_back(tile);
    out.selection = std::move(sel);
  }
  return out;
}

NaeBlock parse_nae(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "nae")
    throw FormatError(lines.empty() ? 0 : lines[0].number, "expected header 'nae <num_vars> <num_clauses>'");
  expect_arity(lines[0], 3);
  NaeBlock out;
  out.instance.num_vars = small(lines[0], 1, "num_vars", 1, 1'000'000);
  const int clauses = small(lines[0], 2, "num_clauses", 1, 1'000'000);
  const int nv = out.instance.num_vars;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "clause") {
      expect_arity(line, 4);
      std::array<int, 3> cl{};
      for (int t = 0; t < 3; ++t) {
        cl[t] = small(line, t + 1, "literal", -nv, nv);
        if (cl[t] == 0) throw FormatError(line.number, "literal 0 is not allowed");
      }
      out.instance.clauses.push_back(cl);
    } else if (line.tokens[0] == "assign") {
      expect_arity(line, static_cast<std::size_t>(nv) + 1);
      if (out.assignment) throw FormatError(line.number, "assignment given twice");
      std::vector<bool> a(nv);
      for (int t = 0; t < nv; ++t) a[t] = small(line, t + 1, "truth value", 0, 1) == 1;
      out.assignment = std::move(a);
    } else {
      throw FormatError(line.number, "expected 'clause' or 'assign' line");
    }
  }
  if (static_cast<int>(out.instance.clauses.size()) != clauses)
    throw FormatError(0, "expected " + std::to_string(clauses) + " clauses, found " +
                             std::to_string(out.instance.clauses.size()));
  try {
    out.instance.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(0, e.what());
  }
  return out;
}

PbcpBlock parse_pbcp(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "pbcp")
    throw FormatError(lines.empty() ? 0 : lines[0].number, "expected header 'pbcp <n> <m> <v> <v2>'");
  expect_arity(lines[0], 5);
  PbcpBlock out;
  out.n = small(lines[0], 1, "n", 1, kMaxVertices);
  const std::int64_t m = integer(lines[0], 2, "m");
  out.v = small(lines[0], 3, "v", 0, out.n - 1);
  out.v2 = small(lines[0], 4, "v2", 0, out.n - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e") throw FormatError(line.number, "expected 'e' line");
    expect_arity(line, 3);
    const int u = small(line, 1, "vertex", 0, out.n - 1);
    const int w = small(line, 2, "vertex", 0, out.n - 1);
    out.edges.emplace_back(std::min(u, w), std::max(u, w));
  }
  if (static_cast<std::int64_t>(out.edges.size()) != m)
    throw FormatError(0, "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(out.edges.size()));
  return out;
}

}  // namespace fcd::cli
