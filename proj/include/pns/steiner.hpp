#pragma once

#include <utility>
#include <vector>

#include "pns/arborescence.hpp"
#include "pns/topology.hpp"

namespace pns {

// Tree subgraph of a topology covering a terminal set.
struct SteinerTree {
  std::vector<int> vertices;               // sorted
  std::vector<std::pair<int, int>> edges;  // in attachment order
  std::vector<int> terminals;              // sorted

  std::vector<int> steiner_nodes() const;  // vertices \ terminals
  bool contains(int v) const;
};

// Shortest-path heuristic: seed with the lowest terminal, then repeatedly
// attach the shortest canonical path between the partial tree and an
// uncovered terminal. Ties on path length prefer the lowest terminal, then
// the highest tree vertex.
SteinerTree steiner_tree(std::vector<int> terminals, const Topology& topo);

// CNOT pairs that raise y_u on every Steiner node: repeatedly take the
// lowest leaf u of the forest induced by the not-yet-covered nodes that has
// a covered tree neighbor, pair it with its lowest covered neighbor v, and
// mark u covered. Pair (u, v) stands for CNOT control u, target v.
std::vector<std::pair<int, int>> fill_in(const SteinerTree& tree);

// CNOT cost of synthesizing a parity with the given support:
// 2|V_T| - |S| - 1 for the heuristic tree (0 for a single terminal).
long long steiner_cost(const std::vector<int>& terminals, const Topology& topo);

struct KSteinerResult {
  long long cost = 0;
  int set_index = 0;
  SteinerTree tree;
};

// Builds all trees simultaneously with a monotone bucket queue keyed by
// accumulated cost (a path of d edges re-inserts at cost + 2d - 1) and
// emits the k cheapest finished trees in nondecreasing cost order. Costs
// equal steiner_cost of the same sets.
std::vector<KSteinerResult> k_min_steiner_trees(
    const std::vector<std::vector<int>>& terminal_sets, const Topology& topo, int k);

// Exact minimum Steiner vertex count by enumerating vertex subsets that
// contain the terminals and induce a connected subgraph. Test oracle;
// guarded to at most 2^10 subsets.
int exact_steiner_tree_size(const std::vector<int>& terminals, const Topology& topo);

// The unique spanning arborescence of the tree rooted at `root`.
Arborescence orient_tree(const SteinerTree& tree, int root);

}  // namespace pns
