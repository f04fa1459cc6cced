#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pns {

// Undirected connected coupling graph over 1-indexed vertices, with
// precomputed all-pairs canonical shortest paths. Immutable once built.
class Topology {
 public:
  // Row-major numbering starting at 1; vertex k of grid(w, h) sits at
  // row (k-1)/w + 1.
  static Topology grid(int width, int height);
  static Topology line(int n);
  static Topology ring(int n);
  static Topology complete(int n);
  // `.graph` text: `n <count>` line, then one `u v` edge per line.
  static Topology from_edge_list(std::string_view text);
  // grid:WxH | line:N | ring:N | complete:N | file:PATH
  static Topology from_spec(const std::string& spec);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;

  int distance(int u, int v) const;
  // Number of vertices on the canonical path, endpoints inclusive.
  int path_vertex_count(int u, int v) const { return distance(u, v) + 1; }
  // Canonical shortest path from u to v, endpoints inclusive.
  std::vector<int> path(int u, int v) const;

 private:
  Topology(int n, std::vector<std::pair<int, int>> edges);

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;   // ascending neighbor lists
  std::vector<std::vector<int>> dist_;  // [source][vertex]
  std::vector<std::vector<int>> pred_;  // [source][vertex] = predecessor on canonical path

  void check_vertex(int v) const;
};

}  // namespace pns
