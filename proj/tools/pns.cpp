#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pns/circuit.hpp"
#include "pns/parity.hpp"
#include "pns/synth.hpp"
#include "pns/topology.hpp"
#include "pns/verify.hpp"
#include "pns/workbench.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

nlohmann::json report_json(const pns::SynthesisReport& report, const std::string& mode,
                           const std::string& arch, std::optional<int> window, int k) {
  nlohmann::json j;
  j["mode"] = mode;
  j["arch"] = arch.empty() ? nlohmann::json() : nlohmann::json(arch);
  j["n"] = report.circuit.qubit_count();
  j["iterations"] = report.trace.size();
  j["window"] = window.has_value() ? nlohmann::json(*window) : nlohmann::json();
  j["k"] = k;
  j["cnot_count"] = report.cnot_count;
  j["cnot_depth"] = report.cnot_depth;
  j["wall_time_s"] = report.wall_time_s;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& it : report.trace) {
    trace.push_back({{"column", it.column},
                     {"parity", it.parity.to_string()},
                     {"support", it.support},
                     {"cost", it.heuristic_cost},
                     {"tree", it.tree_vertices},
                     {"root", it.root},
                     {"gates", it.gates_emitted}});
  }
  j["trace"] = std::move(trace);
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"parity network synthesis for phase polynomials"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random parity table");
  int gen_qubits = 0;
  uint64_t gen_parities = 0;
  double gen_density = 0.0;
  uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--qubits", gen_qubits, "qubit count")->required();
  auto* gen_m = gen->add_option("--parities", gen_parities, "column count");
  auto* gen_d = gen->add_option("--density", gen_density,
                                "column count as a percentage of 2^n - 1");
  gen->add_option("--seed", gen_seed, "rng seed")->required();
  gen->add_option("--out,-o", gen_out, "output .ptab (default stdout)");
  gen_m->excludes(gen_d);

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a parity network");
  std::string synth_table, synth_arch, synth_out, synth_report;
  std::string synth_mode = "alltoall";
  std::string synth_format = "gatelist";
  int synth_window = 0;
  int synth_k = 10;
  synth->add_option("--table,-t", synth_table, "input .ptab file")->required();
  synth->add_option("--arch,-a", synth_arch,
                    "coupling graph: grid:WxH|line:N|ring:N|complete:N|file:PATH");
  synth->add_option("--mode,-m", synth_mode, "alltoall | arch | arch-greedy");
  synth->add_option("--window,-w", synth_window, "sliding window size (0 = off)");
  synth->add_option("--k", synth_k, "cost-vector truncation");
  synth->add_option("--out,-o", synth_out, "output circuit file (default stdout)");
  synth->add_option("--format,-f", synth_format, "gatelist | qasm2");
  synth->add_option("--report", synth_report, "write metrics as JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "check a circuit against a parity table");
  std::string verify_table, verify_circuit, verify_arch;
  verify->add_option("--table,-t", verify_table, "input .ptab file")->required();
  verify->add_option("--circuit,-c", verify_circuit, "gatelist file")->required();
  verify->add_option("--arch,-a", verify_arch, "coupling graph to check compliance against");

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark matrix");
  std::string bench_spec, bench_out;
  bench->add_option("--spec,-s", bench_spec, "bench spec file")->required();
  bench->add_option("--out,-o", bench_out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (gen->parsed()) {
    if (gen_m->count() == 0 && gen_d->count() == 0) {
      std::cerr << "gen: give --parities or --density\n";
      return 2;
    }
    uint64_t m = gen_m->count() ? gen_parities
                                : pns::parities_for_density(gen_qubits, gen_density);
    pns::ParityTable table = pns::random_table(gen_qubits, m, gen_seed);
    std::string text = "# rng " + std::string(pns::kRngName) + " seed " +
                       std::to_string(gen_seed) + "\n" + table.to_ptab();
    write_output(gen_out, text);
    return 0;
  }

  if (synth->parsed()) {
    pns::ParityTable table = pns::ParityTable::parse_ptab(read_file(synth_table));
    pns::SynthesisConfig config;
    if (synth_window > 0) config.window = synth_window;
    config.k_trunc = synth_k;

    pns::SynthesisReport report;
    if (synth_mode == "alltoall") {
      report = pns::synthesize_alltoall(table, config);
    } else if (synth_mode == "arch" || synth_mode == "arch-greedy") {
      if (synth_arch.empty()) {
        std::cerr << "synth: mode " << synth_mode << " needs --arch\n";
        return 2;
      }
      pns::Topology topo = pns::Topology::from_spec(synth_arch);
      report = synth_mode == "arch" ? pns::synthesize_arch(table, topo, config)
                                    : pns::synthesize_arch_greedy(table, topo, config);
    } else {
      std::cerr << "synth: unknown mode '" << synth_mode << "'\n";
      return 2;
    }

    pns::Circuit circuit = report.circuit;
    bool has_angles = false;
    for (int c : table.live_slots()) {
      auto a = table.column_angle(c);
      if (a.has_value() && *a != 0.0) has_angles = true;
    }
    if (has_angles) circuit = pns::insert_rotations(circuit, table);

    std::string text;
    if (synth_format == "gatelist") {
      text = circuit.to_gatelist();
    } else if (synth_format == "qasm2") {
      text = circuit.to_qasm2();
    } else {
      std::cerr << "synth: unknown format '" << synth_format << "'\n";
      return 2;
    }
    write_output(synth_out, text);
    if (!synth_report.empty()) {
      std::optional<int> window;
      if (synth_window > 0) window = synth_window;
      write_output(synth_report,
                   report_json(report, synth_mode, synth_arch, window, synth_k).dump(2) + "\n");
    }
    return 0;
  }

  if (verify->parsed()) {
    pns::ParityTable table = pns::ParityTable::parse_ptab(read_file(verify_table));
    pns::Circuit circuit =
        pns::Circuit::parse_gatelist(read_file(verify_circuit), table.qubit_count());
    bool ok = true;

    auto network = pns::is_parity_network(table, circuit);
    if (!network.ok) {
      ok = false;
      for (const auto& bits : network.missing) {
        std::cerr << "missing parity " << bits.to_string() << "\n";
      }
    }
    if (!verify_arch.empty()) {
      pns::Topology topo = pns::Topology::from_spec(verify_arch);
      auto compliance = pns::respects_topology(circuit, topo);
      if (!compliance.ok) {
        ok = false;
        for (const auto& g : compliance.offending) {
          std::cerr << "cnot " << g.control << " " << g.target
                    << " is not an edge of the coupling graph\n";
        }
      }
    }
    bool has_rz = false;
    for (const auto& g : circuit.gates()) {
      if (g.kind == pns::Gate::Kind::Rz) has_rz = true;
    }
    if (has_rz) {
      if (table.qubit_count() <= 12) {
        auto phase = pns::functional_equivalence(circuit, table);
        if (!phase.ok) {
          ok = false;
          std::cerr << "phase mismatch at basis state " << phase.counterexample << "\n";
        }
      } else {
        std::cerr << "note: skipping phase check (more than 12 qubits)\n";
      }
    }
    if (ok) std::cout << "ok\n";
    return ok ? 0 : 1;
  }

  if (bench->parsed()) {
    pns::BenchSpec spec = pns::parse_bench_spec(read_file(bench_spec));
    pns::BenchResult result = pns::run_bench(spec);
    write_output(bench_out, result.csv);
    for (const auto& f : result.failures) std::cerr << "bench failure: " << f << "\n";
    return result.ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
