#include "rickman/graph.hpp"

#include <algorithm>
#include <deque>

namespace rickman {

void CellGraph::add_edge(int a, int b, Cell witness) {
  if (a == b) throw err("CellGraph: loop");
  if (has_edge(a, b)) return;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  edges_.push_back({{std::min(a, b), std::max(a, b)}, witness});
}

bool CellGraph::has_edge(int a, int b) const {
  for (int x : adj_[a])
    if (x == b) return true;
  return false;
}

int CellGraph::max_valence() const {
  int m = 0;
  for (size_t v = 0; v < adj_.size(); ++v) m = std::max(m, valence(static_cast<int>(v)));
  return m;
}

bool CellGraph::connected(const std::vector<int>& subset) const {
  if (subset.empty()) return true;
  std::vector<char> in(adj_.size(), 0), seen(adj_.size(), 0);
  for (int v : subset) in[v] = 1;
  std::deque<int> q{subset[0]};
  seen[subset[0]] = 1;
  size_t cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj_[v])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push_back(w);
      }
  }
  return cnt == subset.size();
}

bool CellGraph::connected_all() const {
  std::vector<int> all(adj_.size());
  for (size_t i = 0; i < adj_.size(); ++i) all[i] = static_cast<int>(i);
  return connected(all);
}

std::vector<std::vector<int>> CellGraph::components() const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<std::vector<int>> out;
  for (size_t s = 0; s < adj_.size(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    std::deque<int> q{static_cast<int>(s)};
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      out.back().push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

CellGraph adjacency_graph_cubes(const std::vector<Cube>& cubes) {
  CellGraph g(static_cast<int>(cubes.size()));
  const int n = cubes.empty() ? 0 : cubes[0].dim();
  for (size_t i = 0; i < cubes.size(); ++i)
    for (size_t j = i + 1; j < cubes.size(); ++j) {
      if (overlaps(cubes[i], cubes[j]))
        throw err("adjacency_graph: overlapping interiors " + cubes[i].str() + " / " + cubes[j].str());
      int d = meet_dim(cubes[i], cubes[j]);
      if (d != n - 1) continue;
      // the shared rectangle must be a full face of the smaller cube
      const Cube& small = cubes[i].side <= cubes[j].side ? cubes[i] : cubes[j];
      bool full = true;
      Vec lo(n), hi(n);
      for (int a = 0; a < n; ++a) {
        lo.c[a] = std::max(cubes[i].corner[a], cubes[j].corner[a]);
        hi.c[a] = std::min(cubes[i].corner[a] + cubes[i].side, cubes[j].corner[a] + cubes[j].side);
        if (lo[a] < hi[a] && hi[a] - lo[a] != small.side) full = false;
      }
      if (!full) continue;
      unsigned span = 0;
      for (int a = 0; a < n; ++a)
        if (lo[a] < hi[a]) span |= 1u << a;
      g.add_edge(static_cast<int>(i), static_cast<int>(j), Cell(lo, small.side, span));
    }
  return g;
}

CellGraph adjacency_graph(const std::vector<CubeSet>& cells) {
  CellGraph g(static_cast<int>(cells.size()));
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j) {
      int best = -1;
      Cell witness;
      for (const Cube& a : cells[i].cubes())
        for (const Cube& b : cells[j].cubes()) {
          if (overlaps(a, b))
            throw err("adjacency_graph: overlapping interiors between sets " + std::to_string(i) +
                      " and " + std::to_string(j));
          int d = meet_dim(a, b);
          if (d > best) {
            best = d;
            Vec lo(a.dim());
            unsigned span = 0;
            i64 side = 0;
            for (int ax = 0; ax < a.dim(); ++ax) {
              i64 l = std::max(a.corner[ax], b.corner[ax]);
              i64 h = std::min(a.corner[ax] + a.side, b.corner[ax] + b.side);
              lo.c[ax] = l;
              if (l < h) {
                span |= 1u << ax;
                side = h - l;
              }
            }
            witness = Cell(lo, side ? side : 1, span);
          }
        }
      if (best == (cells[i].dim() - 1)) g.add_edge(static_cast<int>(i), static_cast<int>(j), witness);
    }
  return g;
}

RootedTree RootedTree::from_edges(int n, const std::vector<std::pair<int, int>>& edges, int root) {
  RootedTree t;
  t.graph = CellGraph(n);
  for (auto [a, b] : edges) t.graph.add_edge(a, b);
  if (static_cast<int>(edges.size()) != n - 1 || !t.graph.connected_all())
    throw err("RootedTree: not a tree");
  t.root = root;
  t.parent.assign(n, -1);
  std::deque<int> q{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : t.graph.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        t.parent[w] = v;
        q.push_back(w);
      }
  }
  return t;
}

std::vector<int> RootedTree::order_top_down() const {
  std::vector<int> order{root};
  std::vector<char> seen(graph.size(), 0);
  seen[root] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : graph.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

std::vector<int> RootedTree::subtree_behind(int v) const {
  if (v == root) throw err("subtree_behind: v is the root");
  std::vector<int> out{v};
  std::vector<char> seen(graph.size(), 0);
  seen[v] = 1;
  seen[parent[v]] = 1;  // block the path to the root
  for (size_t i = 0; i < out.size(); ++i)
    for (int w : graph.neighbors(out[i]))
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

RootedTree max_tree_valence_bounded(const CellGraph& g, std::optional<int> forbidden_center,
                                    int bound, int root_hint) {
  const int n = g.size();
  std::vector<char> active(n, 1);
  if (forbidden_center) active[*forbidden_center] = 0;
  // BFS spanning tree of the active part, deterministic by vertex id
  std::vector<int> par(n, -2);
  int start = -1;
  for (int v = root_hint; start < 0 && v < n; ++v)
    if (active[v]) start = v;
  for (int v = 0; start < 0 && v < n; ++v)
    if (active[v]) start = v;
  if (start < 0) throw err("max_tree: empty graph");
  std::deque<int> q{start};
  par[start] = -1;
  int found = 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> val(n, 0);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    auto nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end());
    for (int w : nb)
      if (active[w] && par[w] == -2) {
        par[w] = v;
        edges.push_back({v, w});
        ++val[v];
        ++val[w];
        ++found;
        q.push_back(w);
      }
  }
  int need = 0;
  for (int v = 0; v < n; ++v) need += active[v];
  if (found != need) throw err("max_tree: graph disconnected after removing the center");
  if (forbidden_center) {
    // re-attach as a leaf at the least-valence neighbor
    int best = -1;
    for (int w : g.neighbors(*forbidden_center))
      if (active[w] && (best < 0 || val[w] < val[best] || (val[w] == val[best] && w < best))) best = w;
    if (best < 0) throw err("max_tree: center has no neighbors");
    edges.push_back({best, *forbidden_center});
    ++val[best];
    ++val[*forbidden_center];
  }
  // local repair: move leaf edges away from over-full vertices
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (val[v] < bound) continue;
      // find a tree child w of v with an alternative neighbor u of low valence
      for (auto& e : edges) {
        int a = e.first, b = e.second;
        int w = (a == v) ? b : (b == v) ? a : -1;
        if (w < 0) continue;
        for (int u : g.neighbors(w)) {
          if (u == v || val[u] + 1 >= bound) continue;
          // replacing (v,w) with (u,w) must keep a tree: u must not be behind w
          RootedTree tmp = RootedTree::from_edges(n, edges, v);
          auto behind = tmp.subtree_behind(w);
          if (std::binary_search(behind.begin(), behind.end(), u)) continue;
          e = {u, w};
          --val[v];
          ++val[u];
          changed = true;
          break;
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  int maxv = 0;
  for (int v = 0; v < n; ++v) maxv = std::max(maxv, val[v]);
  if (maxv >= bound) throw err("max_tree: valence bound " + std::to_string(bound) + " infeasible");
  return RootedTree::from_edges(n, edges, start);
}

JohnReport john_check(const RootedTree& t) {
  const int n = t.graph.size();
  if (t.rho.size() != static_cast<size_t>(n)) throw err("john_check: rho decoration missing");
  // check every pair via the unique tree path
  std::vector<int> depth(n, 0);
  for (int v : t.order_top_down())
    if (v != t.root) depth[v] = depth[t.parent[v]] + 1;
  auto path = [&](int a, int b) {
    std::vector<int> pa{a}, pb{b};
    int x = a, y = b;
    while (depth[x] > depth[y]) pa.push_back(x = t.parent[x]);
    while (depth[y] > depth[x]) pb.push_back(y = t.parent[y]);
    while (x != y) {
      pa.push_back(x = t.parent[x]);
      pb.push_back(y = t.parent[y]);
    }
    pa.pop_back();
    for (auto it = pb.rbegin(); it != pb.rend(); ++it) pa.push_back(*it);
    return pa;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto p = path(a, b);
      // strictly increasing then strictly decreasing
      size_t i = 1;
      while (i < p.size() && t.rho[p[i - 1]] < t.rho[p[i]]) ++i;
      while (i < p.size() && t.rho[p[i - 1]] > t.rho[p[i]]) ++i;
      if (i != p.size()) return {false, p};
    }
  return {true, {}};
}

static void span_trees_rec(const CellGraph& g, std::vector<std::pair<int, int>>& chosen,
                           std::vector<int>& comp, size_t next_edge,
                           std::vector<std::vector<std::pair<int, int>>>& out, size_t cap) {
  const int n = g.size();
  if (static_cast<int>(chosen.size()) == n - 1) {
    out.push_back(chosen);
    return;
  }
  if (out.size() >= cap) return;
  if (next_edge >= g.edges().size()) return;
  // bound: remaining edges enough?
  if (g.edges().size() - next_edge < static_cast<size_t>(n - 1) - chosen.size()) return;
  auto [ab, w] = g.edges()[next_edge];
  (void)w;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  int ra = find(ab.first), rb = find(ab.second);
  if (ra != rb) {
    auto save = comp;
    comp[ra] = rb;
    chosen.push_back(ab);
    span_trees_rec(g, chosen, comp, next_edge + 1, out, cap);
    chosen.pop_back();
    comp = save;
  }
  span_trees_rec(g, chosen, comp, next_edge + 1, out, cap);
}

std::vector<std::vector<std::pair<int, int>>> all_spanning_trees(const CellGraph& g, size_t cap) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> comp(g.size());
  for (int i = 0; i < g.size(); ++i) comp[i] = i;
  span_trees_rec(g, chosen, comp, 0, out, cap);
  return out;
}

}  // namespace rickman
