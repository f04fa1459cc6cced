#include "pns/synth.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "pns/arborescence.hpp"

namespace pns {

Synthesizer::Synthesizer(ParityTable table, SynthesisConfig config)
    : table_(std::move(table)), config_(config), circuit_(table_.qubit_count()) {
  if (config_.mode != SynthMode::AllToAll) {
    throw std::invalid_argument("architecture-aware modes need a topology");
  }
  if (config_.window.has_value() && *config_.window < 1) {
    throw std::invalid_argument("window must be at least 1");
  }
  if (config_.k_trunc < 1) throw std::invalid_argument("k must be at least 1");
}

Synthesizer::Synthesizer(ParityTable table, const Topology& topo, SynthesisConfig config)
    : table_(std::move(table)), topo_(topo), config_(config), circuit_(table_.qubit_count()) {
  if (topo_->vertex_count() != table_.qubit_count()) {
    throw std::invalid_argument("topology must cover exactly the table's qubits");
  }
  if (config_.window.has_value() && *config_.window < 1) {
    throw std::invalid_argument("window must be at least 1");
  }
  if (config_.k_trunc < 1) throw std::invalid_argument("k must be at least 1");
}

BitVec Synthesizer::view_mask() const {
  if (!config_.window.has_value() || *config_.window >= table_.live_count()) {
    return table_.live_mask();
  }
  return table_.front_mask(*config_.window);
}

int Synthesizer::choose_column(const BitVec& view) const {
  int best = -1;
  long long best_cost = 0;
  int best_h = 0;
  BitVec best_bits;
  bool arch = config_.mode != SynthMode::AllToAll;
  std::vector<int> slots;
  view.for_each_set([&](int c) { slots.push_back(c); });
  for (int c : slots) {
    int h = table_.column_weight(c);
    long long cost = arch ? steiner_cost(table_.column_support(c), *topo_)
                          : static_cast<long long>(h);
    bool better;
    if (best < 0) {
      better = true;
    } else if (cost != best_cost) {
      better = cost < best_cost;
    } else if (arch && h != best_h) {
      better = h < best_h;
    } else {
      BitVec bits = table_.column_bits(c);
      better = parity_key_less(bits, best_bits);
    }
    if (better) {
      best = c;
      best_cost = cost;
      best_h = h;
      best_bits = table_.column_bits(c);
    }
  }
  return best;
}

void Synthesizer::emit(int control, int target) {
  circuit_.append_cnot(control, target);
  table_.row_add(control, target);
}

void Synthesizer::step() {
  if (done()) throw std::logic_error("synthesis already finished");
  // The iteration's view is fixed here; the next unconsidered column only
  // enters the window on the following iteration.
  BitVec view = view_mask();
  int slot = choose_column(view);
  view.set(slot, false);

  IterationRecord record;
  record.column = slot;
  record.parity = table_.column_bits(slot);
  record.support = table_.column_support(slot);

  int before = circuit_.cnot_count();
  if (config_.mode == SynthMode::AllToAll) {
    step_alltoall(slot, view, record);
  } else {
    step_arch(slot, view, record);
  }
  record.gates_emitted = circuit_.cnot_count() - before;
  trace_.push_back(std::move(record));
}

void Synthesizer::step_alltoall(int slot, const BitVec& view, IterationRecord& record) {
  record.heuristic_cost = table_.column_weight(slot) - 1;
  std::vector<int> support_set = record.support;
  table_.remove_column(slot);

  if (support_set.size() == 1) {
    record.root = support_set.front();
    return;
  }
  // The column is gone before the graph is built, so the weights only
  // reflect remaining work.
  ParityGraph graph = build_parity_graph(table_, support_set, view);
  Arborescence arb = min_weight_spanning_arborescence(graph);
  record.root = arb.root;
  for (auto [i, j] : traversal_sequence(arb)) emit(i, j);
}

int Synthesizer::pick_root(const SteinerTree& tree, const BitVec& view) const {
  if (config_.mode == SynthMode::ArchGreedy) return tree.terminals.front();
  if (tree.vertices.size() == 1) return tree.vertices.front();

  std::vector<int> visible;
  view.for_each_set([&](int c) { visible.push_back(c); });
  if (visible.empty()) return tree.vertices.front();

  int best_root = -1;
  std::vector<long long> best_costs;
  for (int root : tree.vertices) {
    // apply the candidate traversal, score the remaining table, undo
    ParityTable scratch = table_;
    auto seq = traversal_sequence(orient_tree(tree, root));
    for (auto [i, j] : seq) scratch.row_add(i, j);

    std::vector<std::vector<int>> sets;
    sets.reserve(visible.size());
    for (int c : visible) sets.push_back(scratch.column_support(c));
    std::vector<long long> costs;
    costs.reserve(static_cast<size_t>(config_.k_trunc));
    for (const auto& r : k_min_steiner_trees(sets, *topo_, config_.k_trunc)) {
      costs.push_back(r.cost);
    }
    if (best_root < 0 || std::lexicographical_compare(costs.begin(), costs.end(),
                                                      best_costs.begin(), best_costs.end())) {
      best_root = root;
      best_costs = std::move(costs);
    }
  }
  return best_root;
}

void Synthesizer::step_arch(int slot, const BitVec& view, IterationRecord& record) {
  std::vector<int> support_set = record.support;
  table_.remove_column(slot);

  SteinerTree tree = steiner_tree(support_set, *topo_);
  record.tree_vertices = tree.vertices;
  record.heuristic_cost = 2 * static_cast<long long>(tree.vertices.size()) -
                          static_cast<long long>(tree.terminals.size()) - 1;

  for (auto [u, v] : fill_in(tree)) emit(u, v);

  int root = pick_root(tree, view);
  record.root = root;
  for (auto [i, j] : traversal_sequence(orient_tree(tree, root))) emit(i, j);
}

SynthesisReport Synthesizer::run() {
  auto t0 = std::chrono::steady_clock::now();
  while (!done()) step();
  auto t1 = std::chrono::steady_clock::now();

  SynthesisReport report;
  report.circuit = circuit_;
  report.trace = trace_;
  report.cnot_count = circuit_.cnot_count();
  report.cnot_depth = circuit_.cnot_depth();
  report.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

SynthesisReport synthesize_alltoall(const ParityTable& table, SynthesisConfig config) {
  config.mode = SynthMode::AllToAll;
  return Synthesizer(table, config).run();
}

SynthesisReport synthesize_arch(const ParityTable& table, const Topology& topo,
                                SynthesisConfig config) {
  config.mode = SynthMode::Arch;
  return Synthesizer(table, topo, config).run();
}

SynthesisReport synthesize_arch_greedy(const ParityTable& table, const Topology& topo,
                                       SynthesisConfig config) {
  config.mode = SynthMode::ArchGreedy;
  return Synthesizer(table, topo, config).run();
}

}  // namespace pns
