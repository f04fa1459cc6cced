#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pns/circuit.hpp"
#include "pns/parity.hpp"
#include "pns/synth.hpp"
#include "pns/topology.hpp"

namespace pns {

// Identifier of the generator behind every seeded draw, recorded in
// generated files and reports.
inline constexpr const char* kRngName = "mt19937_64";

// m distinct nonzero parities drawn uniformly without replacement; the
// column order comes from the same seeded stream.
ParityTable random_table(int qubit_count, uint64_t column_count, uint64_t seed);

// floor(percent/100 * (2^n - 1)), clamped to [1, 2^n - 1].
uint64_t parities_for_density(int qubit_count, double percent);

// Sanity baseline: each column is synthesized independently (Steiner tree,
// fill-in, traversal rooted at the lowest terminal) and then uncomputed by
// replaying the gates in reverse, restoring the identity wire state.
Circuit naive_baseline(const ParityTable& table, const Topology& topo);

struct BenchSpec {
  std::vector<std::string> archs;      // topology specs, or alltoall:N
  std::vector<double> densities;       // percent; exclusive with parities
  std::vector<uint64_t> parities;
  std::vector<std::string> modes;      // alltoall | arch | arch-greedy
  int reps = 1;
  uint64_t seed = 0;
  std::optional<int> window;
  int k_trunc = 10;
};

BenchSpec parse_bench_spec(std::string_view text);

struct BenchResult {
  std::string csv;
  bool ok = true;
  std::vector<std::string> failures;
};

// Runs every (arch, size, mode) cell `reps` times with seeds seed+rep,
// verifies each output, and emits one CSV row per run plus a per-cell mean
// row. Verification time is excluded from the recorded wall time.
BenchResult run_bench(const BenchSpec& spec);

}  // namespace pns
