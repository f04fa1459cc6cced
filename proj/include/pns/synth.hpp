#pragma once

#include <optional>
#include <vector>

#include "pns/circuit.hpp"
#include "pns/parity.hpp"
#include "pns/steiner.hpp"
#include "pns/topology.hpp"

namespace pns {

enum class SynthMode { AllToAll, Arch, ArchGreedy };

struct SynthesisConfig {
  SynthMode mode = SynthMode::AllToAll;
  // Sliding window size: each iteration only sees the first `window` live
  // columns in input order. Absent = the whole table.
  std::optional<int> window;
  // Cost vectors are compared on at most this many entries.
  int k_trunc = 10;
};

struct IterationRecord {
  int column = 0;  // slot in the input table
  BitVec parity;   // value at the moment it was chosen
  std::vector<int> support;
  long long heuristic_cost = 0;     // h(y)-1, or C(y) for arch modes
  std::vector<int> tree_vertices;   // arch modes
  int root = 0;
  int gates_emitted = 0;
};

struct SynthesisReport {
  Circuit circuit{1};
  std::vector<IterationRecord> trace;
  int cnot_count = 0;
  int cnot_depth = 0;
  double wall_time_s = 0.0;
};

// One synthesis run. Consumes one parity per step; the mutated table and
// the growing circuit are inspectable between steps.
class Synthesizer {
 public:
  Synthesizer(ParityTable table, SynthesisConfig config);
  Synthesizer(ParityTable table, const Topology& topo, SynthesisConfig config);

  bool done() const { return table_.empty(); }
  void step();
  // Steps to completion and returns circuit + trace + metrics.
  SynthesisReport run();

  const ParityTable& table() const { return table_; }
  const Circuit& circuit() const { return circuit_; }
  const std::vector<IterationRecord>& trace() const { return trace_; }

 private:
  ParityTable table_;
  std::optional<Topology> topo_;
  SynthesisConfig config_;
  Circuit circuit_;
  std::vector<IterationRecord> trace_;

  BitVec view_mask() const;
  int choose_column(const BitVec& view) const;
  void emit(int control, int target);
  void step_alltoall(int slot, const BitVec& view, IterationRecord& record);
  void step_arch(int slot, const BitVec& view, IterationRecord& record);
  int pick_root(const SteinerTree& tree, const BitVec& view) const;
};

// Minimum-Hamming-weight parity choice and minimum-weight spanning
// arborescence per iteration.
SynthesisReport synthesize_alltoall(const ParityTable& table, SynthesisConfig config = {});

// Steiner-cost parity choice, fill-in, and the root whose traversal leaves
// the cheapest truncated sorted cost vector.
SynthesisReport synthesize_arch(const ParityTable& table, const Topology& topo,
                                SynthesisConfig config = {});

// Like synthesize_arch but with the root fixed to the lowest terminal,
// skipping the cost-vector search.
SynthesisReport synthesize_arch_greedy(const ParityTable& table, const Topology& topo,
                                       SynthesisConfig config = {});

}  // namespace pns
