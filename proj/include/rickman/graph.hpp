#pragma once

#include <optional>

#include "rickman/cubeset.hpp"

namespace rickman {

// Adjacency graph over abstract cell ids. Edges carry the shared (k-1)-cell
// witness when built geometrically. No loops, no multi-edges.
class CellGraph {
 public:
  explicit CellGraph(int vertices = 0) : adj_(vertices) {}

  int add_vertex() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  void add_edge(int a, int b, Cell witness = {});
  bool has_edge(int a, int b) const;
  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int valence(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_valence() const;
  const std::vector<std::pair<std::pair<int, int>, Cell>>& edges() const { return edges_; }

  bool connected(const std::vector<int>& subset) const;
  bool connected_all() const;
  std::vector<std::vector<int>> components() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<std::pair<int, int>, Cell>> edges_;
};

// adjacency graph of same-side cubes: edge iff the intersection is a common
// (n-1)-face
CellGraph adjacency_graph_cubes(const std::vector<Cube>& cubes);

// adjacency graph of cubical sets: edge iff the intersection contains a
// (k-1)-cell (k = intrinsic dimension); errors on overlapping interiors
CellGraph adjacency_graph(const std::vector<CubeSet>& cells);

struct RootedTree {
  CellGraph graph;          // a tree
  int root = 0;
  std::vector<int> parent;  // parent[root] == -1
  std::vector<i64> rho;     // side-length decoration (optional)

  static RootedTree from_edges(int n, const std::vector<std::pair<int, int>>& edges, int root);
  std::vector<int> order_top_down() const;  // root first
  std::vector<int> subtree_behind(int v) const;
  int valence(int v) const { return graph.valence(v); }
};

// Spanning tree with max valence < bound. When `forbidden_center` is given,
// the tree is built on G minus that vertex first and the center re-attached
// as a leaf (its neighbor must stay under the bound).
RootedTree max_tree_valence_bounded(const CellGraph& g, std::optional<int> forbidden_center,
                                    int bound, int root_hint = 0);

struct JohnReport {
  bool ok = true;
  std::vector<int> witness_path;  // a path violating unimodality, if any
};
// rho has the John property iff along every vertex pair's path it is strictly
// increasing then strictly decreasing
JohnReport john_check(const RootedTree& t);

// exhaustive spanning-tree enumeration for small graphs (test oracle)
std::vector<std::vector<std::pair<int, int>>> all_spanning_trees(const CellGraph& g, size_t cap = 1u << 20);

}  // namespace rickman
