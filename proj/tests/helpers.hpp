#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pns/circuit.hpp"
#include "pns/parity.hpp"
#include "pns/topology.hpp"

namespace testing {

// 5x7 example table, columns read top to bottom.
inline const std::vector<std::string> kExampleTable5x7 = {
    "01101", "01110", "10011", "10111", "11001", "11011", "11111",
};

// The same table after row_add(5,2) and row_add(2,3).
inline const std::vector<std::string> kExampleTable5x7After = {
    "00100", "00111", "10011", "11111", "11000", "11010", "10110",
};

inline pns::ParityTable example_table_5x7() {
  std::vector<pns::Parity> columns;
  for (const auto& s : kExampleTable5x7) columns.push_back(pns::Parity::from_string(s));
  return pns::ParityTable(5, std::move(columns));
}

// 4-qubit annotated example: CNOTs (2,1),(3,1),(1,2),(4,2); parities
// 1100, 1110, 1011 with angles t1, t2, t3.
inline pns::Circuit annotated_circuit_4q() {
  pns::Circuit c(4);
  c.append_cnot(2, 1);
  c.append_cnot(3, 1);
  c.append_cnot(1, 2);
  c.append_cnot(4, 2);
  return c;
}

inline pns::ParityTable annotated_table_4q(double t1, double t2, double t3) {
  std::vector<pns::Parity> columns;
  columns.push_back(pns::Parity::from_string("1100", t1));
  columns.push_back(pns::Parity::from_string("1110", t2));
  columns.push_back(pns::Parity::from_string("1011", t3));
  return pns::ParityTable(4, std::move(columns));
}

inline uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

inline pns::BitVec random_nonzero_bits(int n, std::mt19937_64& rng) {
  pns::BitVec bits(n);
  do {
    for (int q = 0; q < n; ++q) bits.set(q, rand_below(rng, 2) == 1);
  } while (bits.none());
  return bits;
}

// Random table with distinct nonzero columns.
inline pns::ParityTable random_test_table(int n, int m, std::mt19937_64& rng) {
  if (n < 20 && m > (1 << n) - 1) throw std::invalid_argument("m too large for n");
  std::vector<pns::Parity> columns;
  std::vector<pns::BitVec> seen;
  while (static_cast<int>(columns.size()) < m) {
    pns::BitVec bits = random_nonzero_bits(n, rng);
    if (std::find(seen.begin(), seen.end(), bits) != seen.end()) continue;
    seen.push_back(bits);
    columns.emplace_back(std::move(bits));
  }
  return pns::ParityTable(n, std::move(columns));
}

// Random connected graph: random spanning tree plus extra edges.
inline pns::Topology random_connected_topology(int n, double extra_edge_prob,
                                               std::mt19937_64& rng) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v + 1;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<size_t>(i)],
              order[static_cast<size_t>(rand_below(rng, static_cast<uint64_t>(i) + 1))]);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int attach = order[static_cast<size_t>(rand_below(rng, static_cast<uint64_t>(i)))];
    edges.emplace_back(std::min(order[static_cast<size_t>(i)], attach),
                       std::max(order[static_cast<size_t>(i)], attach));
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end()) continue;
      if (rand_below(rng, 1000) < static_cast<uint64_t>(extra_edge_prob * 1000)) {
        edges.emplace_back(u, v);
      }
    }
  }
  std::string text = "n " + std::to_string(n) + "\n";
  for (auto [u, v] : edges) text += std::to_string(u) + " " + std::to_string(v) + "\n";
  return pns::Topology::from_edge_list(text);
}

// Independent CNOT-depth oracle: longest path in the explicit conflict DAG
// where earlier gates point at later gates sharing a qubit.
inline int conflict_dag_depth(const pns::Circuit& circuit) {
  std::vector<const pns::Gate*> cnots;
  for (const auto& g : circuit.gates()) {
    if (g.kind == pns::Gate::Kind::Cnot) cnots.push_back(&g);
  }
  std::vector<int> longest(cnots.size(), 1);
  int depth = 0;
  for (size_t i = 0; i < cnots.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      bool conflict = cnots[j]->control == cnots[i]->control ||
                      cnots[j]->control == cnots[i]->target ||
                      cnots[j]->target == cnots[i]->control ||
                      cnots[j]->target == cnots[i]->target;
      if (conflict) longest[i] = std::max(longest[i], longest[j] + 1);
    }
    depth = std::max(depth, longest[i]);
  }
  return depth;
}

}  // namespace testing
