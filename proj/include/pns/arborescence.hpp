#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pns/parity.hpp"

namespace pns {

// Complete weighted digraph over a parity's support. Arc (i, j) carries
// w = h(P_i ^ P_j) - h(P_j), the table-weight change caused by the row
// addition P_j ^= P_i. Weights may be negative.
struct ParityGraph {
  std::vector<int> vertices;                   // ascending qubit indices
  std::vector<std::vector<long long>> weight;  // [a][b] = arc vertices[a] -> vertices[b]

  long long arc(int from_vertex, int to_vertex) const;
};

// Graph over the support of `slot`, weighted against the table's live
// columns (the slot itself contributes while it is still live).
ParityGraph build_parity_graph(const ParityTable& table, int slot);
// Same, with an explicit vertex set and column mask.
ParityGraph build_parity_graph(const ParityTable& table, const std::vector<int>& support_set,
                               const BitVec& mask);

// Rooted directed spanning tree; arcs point away from the root.
struct Arborescence {
  int root = 0;
  std::map<int, int> parent;  // non-root vertex -> its parent
};

long long arborescence_weight(const ParityGraph& graph, const Arborescence& a);

// Minimizes the arc-weight sum over all roots and all spanning
// arborescences (Edmonds branching over a virtual super-root, so negative
// weights are fine). Deterministic for fixed input.
Arborescence min_weight_spanning_arborescence(const ParityGraph& graph);

// Every spanning arborescence over every root: n^(n-1) of them. Test
// oracle; guarded to at most 7 vertices.
std::vector<Arborescence> enumerate_arborescences(std::vector<int> vertices);

// Successors-first order: depth-first postorder from the root with children
// visited in ascending vertex index. Each pair (i, j) stands for the gate
// CNOT with control i and target j, i.e. row_add(i, j); the root is omitted.
std::vector<std::pair<int, int>> traversal_sequence(const Arborescence& a);

}  // namespace pns
