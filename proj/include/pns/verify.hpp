#pragma once

#include <cstdint>
#include <vector>

#include "pns/circuit.hpp"
#include "pns/parity.hpp"
#include "pns/topology.hpp"

namespace pns {

// Per-wire GF(2) row over the input variables: wire w carries the parity
// rows[w] . x. Starts as the identity and stays invertible, since every
// CNOT is an elementary row operation.
class WireState {
 public:
  explicit WireState(int qubit_count);

  int qubit_count() const { return n_; }
  void apply(const Gate& g);
  const BitVec& wire(int qubit) const;
  bool is_identity() const;
  bool invertible() const;

 private:
  int n_ = 0;
  std::vector<BitVec> rows_;
};

// Wire states after every prefix of the circuit, the empty prefix included.
std::vector<WireState> simulate_wires(const Circuit& circuit);

struct ParityNetworkReport {
  bool ok = false;
  std::vector<BitVec> missing;  // in table column order
};

// ok iff every live column of the table equals some wire row after some
// prefix (the inputs cover the weight-1 parities).
ParityNetworkReport is_parity_network(const ParityTable& table, const Circuit& circuit);

struct TopologyReport {
  bool ok = false;
  std::vector<Gate> offending;
};

// ok iff every CNOT acts on an edge of the coupling graph.
TopologyReport respects_topology(const Circuit& circuit, const Topology& topo);

struct PhaseReport {
  bool ok = false;
  uint64_t counterexample = 0;  // basis state, bit q-1 = qubit q
  WireState linear_map{1};      // final wire state, for caller inspection
};

// Exhaustive basis-state check that the circuit's accumulated RZ phase
// matches the table's phase polynomial on all 2^n inputs, mod 2pi within
// 1e-9. Guarded to n <= 12.
PhaseReport functional_equivalence(const Circuit& circuit, const ParityTable& table);

inline constexpr double kPhaseTolerance = 1e-9;

}  // namespace pns
