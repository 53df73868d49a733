#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcd/budget.hpp"
#include "fcd/graph.hpp"

namespace fcd {

enum class GraphClass { kPath, kCycle, kStar, kCaterpillar, kTree, kForest, kGeneral };

std::string to_string(GraphClass c);

struct StructureReport {
  GraphClass class_tag = GraphClass::kGeneral;
  bool is_connected = false;
  int num_components = 0;
  int num_edges = 0;
  int degree_ge2_count = 0;  // vertices of degree >= 2
  int fen = 0;               // m - n + components
  // path: the path order from its lower-id end; cycle: cyclic order from
  // vertex 0; star: the center; caterpillar: leaf-deleted spine from its
  // lower-id end.
  std::optional<std::vector<Vertex>> spine;
};

/// Most specific class: path, cycle, star, caterpillar, tree, forest, general.
StructureReport classify_graph(const ColoredGraph& graph);

/// A maximal path whose inner vertices have degree two, or a cycle through a
/// single endpoint.  For cycles vertices.front() == vertices.back().
struct Branch {
  std::vector<Vertex> vertices;
  bool is_cycle = false;
  int length() const { return static_cast<int>(vertices.size()); }
};

struct BranchDecomposition {
  std::vector<Branch> branches;
  std::vector<Vertex> endpoints;  // sorted
};

/// Endpoints are the vertices of degree != 2.  A graph that is a single
/// cycle gets one cycle branch anchored at vertex 0.  Throws
/// std::invalid_argument for disconnected graphs.
BranchDecomposition branch_decomposition(const ColoredGraph& graph);

/// Non-tree edges of a deterministic spanning forest; minimum size.
std::vector<Edge> feedback_edge_set(const ColoredGraph& graph);

/// Exact minimum vertex cover by bounded search.  Throws BudgetExceeded if
/// the cover number exceeds max_size.
std::vector<Vertex> minimum_vertex_cover(const ColoredGraph& graph, int max_size,
                                         WorkBudget* budget = nullptr);

bool is_vertex_cover(const ColoredGraph& graph, const std::vector<Vertex>& cover);

/// Rooted tree decomposition: node i has bag bags[i] and parent parent[i]
/// (-1 for the root).
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;
  int width() const;
};

/// Raised when a tree decomposition violates one of the three axioms
/// (1: every vertex covered, 2: every edge covered, 3: occurrences of a vertex
/// connected) or is not a rooted tree (axiom 0).
class InvalidDecomposition : public std::invalid_argument {
 public:
  InvalidDecomposition(int axiom, const std::string& what)
      : std::invalid_argument("tree decomposition violates axiom " + std::to_string(axiom) +
                              ": " + what),
        axiom_(axiom) {}
  int axiom() const { return axiom_; }

 private:
  int axiom_;
};

void validate_tree_decomposition(const ColoredGraph& graph, const TreeDecomposition& td);

/// Width-1 decomposition of a forest (width 0 if there are no edges).
TreeDecomposition forest_tree_decomposition(const ColoredGraph& graph);

enum class NiceNodeType { kLeaf, kIntroduceVertex, kIntroduceEdge, kForget, kJoin };

struct NiceNode {
  NiceNodeType type = NiceNodeType::kLeaf;
  std::vector<Vertex> bag;  // sorted
  Vertex vertex = -1;       // leaf / introduce-vertex / forget
  Edge edge{-1, -1};        // introduce-edge, first < second
  std::vector<int> children;
};

/// Nodes are stored in post-order: every child precedes its parent, the root
/// is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = 0;
};

/// Checks node types against bags (leaf: one vertex; introduce/forget: one
/// vertex difference; join: two children with equal bags), that every graph
/// edge is introduced exactly once with both endpoints in the bag, and that
/// the underlying bags form a tree decomposition.  Throws
/// InvalidDecomposition.
void validate_nice_tree_decomposition(const ColoredGraph& graph, const NiceTreeDecomposition& ntd);

/// Nicifies `td` (validated first), or builds a forest decomposition when td
/// is omitted (throws std::invalid_argument if the graph has a cycle).
/// Each edge is introduced once, at the highest node whose bag holds both
/// endpoints; new vertices are introduced before edges.
NiceTreeDecomposition nice_tree_decomposition(const ColoredGraph& graph,
                                              const std::optional<TreeDecomposition>& td = {});

}  // namespace fcd
