#include "pns/workbench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "pns/steiner.hpp"
#include "pns/verify.hpp"

namespace pns {

namespace {

// Unbiased bounded draw built on the raw engine output, so results do not
// depend on the standard library's distribution implementations.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty draw range");
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ParityTable random_table(int qubit_count, uint64_t column_count, uint64_t seed) {
  if (qubit_count < 1) throw std::invalid_argument("need at least one qubit");
  if (column_count < 1) throw std::invalid_argument("need at least one column");
  if (qubit_count <= 63 && column_count > (uint64_t{1} << qubit_count) - 1) {
    throw std::invalid_argument("more columns than distinct nonzero parities");
  }

  std::mt19937_64 rng(seed);
  std::vector<Parity> columns;
  columns.reserve(static_cast<size_t>(column_count));

  if (qubit_count <= 20) {
    // partial Fisher-Yates over the full candidate range
    uint64_t total = (uint64_t{1} << qubit_count) - 1;
    std::vector<uint64_t> values(static_cast<size_t>(total));
    for (uint64_t v = 0; v < total; ++v) values[static_cast<size_t>(v)] = v + 1;
    for (uint64_t i = 0; i < column_count; ++i) {
      uint64_t j = i + uniform_below(rng, total - i);
      std::swap(values[static_cast<size_t>(i)], values[static_cast<size_t>(j)]);
      BitVec bits(qubit_count);
      for (int q = 0; q < qubit_count; ++q) {
        if (values[static_cast<size_t>(i)] >> q & 1u) bits.set(q);
      }
      columns.emplace_back(std::move(bits));
    }
  } else {
    std::unordered_set<BitVec, BitVecHash> seen;
    while (columns.size() < column_count) {
      BitVec bits(qubit_count);
      for (int q = 0; q < qubit_count; q += 64) {
        uint64_t w = rng();
        for (int b = 0; b < 64 && q + b < qubit_count; ++b) {
          if (w >> b & 1u) bits.set(q + b);
        }
      }
      if (bits.none() || !seen.insert(bits).second) continue;
      columns.emplace_back(std::move(bits));
    }
  }
  return ParityTable(qubit_count, std::move(columns));
}

uint64_t parities_for_density(int qubit_count, double percent) {
  if (qubit_count < 1 || qubit_count > 62) {
    throw std::invalid_argument("density-driven sizes supported for 1..62 qubits");
  }
  if (percent <= 0.0 || percent > 100.0) {
    throw std::invalid_argument("density must be in (0, 100]");
  }
  uint64_t total = (uint64_t{1} << qubit_count) - 1;
  auto m = static_cast<uint64_t>(std::floor(percent / 100.0 * static_cast<double>(total)));
  return std::clamp<uint64_t>(m, 1, total);
}

Circuit naive_baseline(const ParityTable& table, const Topology& topo) {
  if (topo.vertex_count() != table.qubit_count()) {
    throw std::invalid_argument("topology must cover exactly the table's qubits");
  }
  Circuit circuit(table.qubit_count());
  for (int c : table.live_slots()) {
    std::vector<int> s = table.column_support(c);
    if (s.size() == 1) continue;  // already on a wire
    SteinerTree tree = steiner_tree(s, topo);
    std::vector<std::pair<int, int>> gates = fill_in(tree);
    for (auto [i, j] : traversal_sequence(orient_tree(tree, tree.terminals.front()))) {
      gates.emplace_back(i, j);
    }
    for (auto [i, j] : gates) circuit.append_cnot(i, j);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
      circuit.append_cnot(it->first, it->second);
    }
  }
  return circuit;
}

BenchSpec parse_bench_spec(std::string_view text) {
  BenchSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("bench spec line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "arch") {
      std::string a;
      while (ls >> a) spec.archs.push_back(a);
    } else if (key == "density") {
      double d;
      while (ls >> d) spec.densities.push_back(d);
    } else if (key == "parities") {
      uint64_t m;
      while (ls >> m) spec.parities.push_back(m);
    } else if (key == "mode") {
      std::string m;
      while (ls >> m) {
        if (m != "alltoall" && m != "arch" && m != "arch-greedy") fail("unknown mode " + m);
        spec.modes.push_back(m);
      }
    } else if (key == "reps") {
      if (!(ls >> spec.reps) || spec.reps < 1) fail("bad reps");
    } else if (key == "seed") {
      if (!(ls >> spec.seed)) fail("bad seed");
    } else if (key == "window") {
      int w;
      if (!(ls >> w) || w < 0) fail("bad window");
      if (w > 0) spec.window = w;
    } else if (key == "k") {
      if (!(ls >> spec.k_trunc) || spec.k_trunc < 1) fail("bad k");
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (spec.archs.empty()) throw std::runtime_error("bench spec: no arch entries");
  if (spec.modes.empty()) throw std::runtime_error("bench spec: no mode entries");
  if (spec.densities.empty() == spec.parities.empty()) {
    throw std::runtime_error("bench spec: give exactly one of density / parities");
  }
  return spec;
}

BenchResult run_bench(const BenchSpec& spec) {
  BenchResult result;
  std::string& csv = result.csv;
  csv = "arch,n,m,density,mode,seed,cnot_count,cnot_depth,wall_time_s\n";

  for (const std::string& arch : spec.archs) {
    std::optional<Topology> topo;
    int n;
    if (arch.rfind("alltoall:", 0) == 0) {
      n = std::stoi(arch.substr(9));
      if (n < 1) throw std::runtime_error("bad arch '" + arch + "'");
    } else {
      topo = Topology::from_spec(arch);
      n = topo->vertex_count();
    }

    std::vector<std::pair<uint64_t, double>> sizes;  // (m, density)
    if (!spec.densities.empty()) {
      for (double d : spec.densities) sizes.emplace_back(parities_for_density(n, d), d);
    } else {
      for (uint64_t m : spec.parities) {
        double density = n <= 62
            ? 100.0 * static_cast<double>(m) / (std::ldexp(1.0, n) - 1.0)
            : 0.0;
        sizes.emplace_back(m, density);
      }
    }

    for (auto [m, density] : sizes) {
      for (const std::string& mode : spec.modes) {
        if (mode != "alltoall" && !topo.has_value()) {
          throw std::runtime_error("mode " + mode + " needs a coupling graph, got " + arch);
        }
        double sum_count = 0, sum_depth = 0, sum_time = 0;
        double naive_sum = 0;
        for (int rep = 0; rep < spec.reps; ++rep) {
          uint64_t seed = spec.seed + static_cast<uint64_t>(rep);
          ParityTable table = random_table(n, m, seed);

          SynthesisConfig config;
          config.window = spec.window;
          config.k_trunc = spec.k_trunc;
          SynthesisReport report{};
          if (mode == "alltoall") {
            report = synthesize_alltoall(table, config);
          } else if (mode == "arch") {
            report = synthesize_arch(table, *topo, config);
          } else {
            report = synthesize_arch_greedy(table, *topo, config);
          }

          auto network = is_parity_network(table, report.circuit);
          if (!network.ok) {
            result.ok = false;
            result.failures.push_back(arch + " m=" + std::to_string(m) + " mode=" + mode +
                                      " seed=" + std::to_string(seed) +
                                      ": output is not a parity network");
          }
          if (mode != "alltoall") {
            auto compliance = respects_topology(report.circuit, *topo);
            if (!compliance.ok) {
              result.ok = false;
              result.failures.push_back(arch + " m=" + std::to_string(m) + " mode=" + mode +
                                        " seed=" + std::to_string(seed) +
                                        ": output violates the coupling graph");
            }
            naive_sum += naive_baseline(table, *topo).cnot_count();
          }

          sum_count += report.cnot_count;
          sum_depth += report.cnot_depth;
          sum_time += report.wall_time_s;
          csv += arch + ',' + std::to_string(n) + ',' + std::to_string(m) + ',' +
                 format_double(density) + ',' + mode + ',' + std::to_string(seed) + ',' +
                 std::to_string(report.cnot_count) + ',' + std::to_string(report.cnot_depth) +
                 ',' + format_double(report.wall_time_s) + '\n';
        }
        double inv = 1.0 / spec.reps;
        csv += arch + ',' + std::to_string(n) + ',' + std::to_string(m) + ',' +
               format_double(density) + ',' + mode + ",mean," +
               format_double(sum_count * inv) + ',' + format_double(sum_depth * inv) + ',' +
               format_double(sum_time * inv) + '\n';
        if (mode != "alltoall" && sum_count * inv > naive_sum * inv) {
          result.ok = false;
          result.failures.push_back(arch + " m=" + std::to_string(m) + " mode=" + mode +
                                    ": mean CNOT count exceeds the naive baseline");
        }
      }
    }
  }
  return result;
}

}  // namespace pns
