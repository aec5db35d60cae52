#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace qaoa {

/// Undirected simple graph for MaxCut instances. Edges are kept in canonical
/// order (each pair sorted, list sorted) so equal graphs serialize
/// identically. Self-loops and duplicate edges are rejected; isolated
/// vertices are allowed.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  Graph(int n_vertices, std::vector<Edge> edges);

  /// Parses either the edge-list text format (optional leading `n=<int>`
  /// header, one `u v` pair per line, `#` comments, blank lines ignored) or a
  /// JSON document {"n": ..., "edges": [[u,v],...]}, auto-detected by the
  /// first non-blank character.
  static Graph parse(std::string_view text);

  static Graph ring(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph erdos_renyi(int n, double edge_prob, std::uint64_t seed);

  int n_vertices() const noexcept { return n_; }
  int n_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Local environment of an edge (u, v): d = degree(u) - 1, e = degree(v) - 1,
/// f = number of triangles containing the edge. Always f <= min(d, e).
struct EdgeLocalEnv {
  int d = 0;
  int e = 0;
  int f = 0;
};

EdgeLocalEnv edge_local_env(const Graph& g, int u, int v);

/// Class key (d, e, f) stored with d <= e; the level-1 edge expectation is
/// symmetric in the two degrees.
struct EdgeClass {
  int d = 0;
  int e = 0;
  int f = 0;
  friend auto operator<=>(const EdgeClass&, const EdgeClass&) = default;
};

/// Multiplicity chi per edge class; values sum to the edge count.
using EdgeClassTable = std::map<EdgeClass, int>;

EdgeClassTable classify_edges(const Graph& g);

}  // namespace qaoa
