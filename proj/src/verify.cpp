#include "pns/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace pns {

WireState::WireState(int qubit_count) : n_(qubit_count) {
  if (n_ < 1) throw std::invalid_argument("wire state needs at least one qubit");
  rows_.reserve(static_cast<size_t>(n_));
  for (int q = 0; q < n_; ++q) {
    BitVec row(n_);
    row.set(q);
    rows_.push_back(std::move(row));
  }
}

void WireState::apply(const Gate& g) {
  if (g.kind == Gate::Kind::Cnot) {
    rows_[static_cast<size_t>(g.target - 1)] ^= rows_[static_cast<size_t>(g.control - 1)];
  }
}

const BitVec& WireState::wire(int qubit) const {
  if (qubit < 1 || qubit > n_) throw std::out_of_range("qubit index out of range");
  return rows_[static_cast<size_t>(qubit - 1)];
}

bool WireState::is_identity() const {
  for (int q = 0; q < n_; ++q) {
    if (rows_[static_cast<size_t>(q)].popcount() != 1 || !rows_[static_cast<size_t>(q)].test(q)) {
      return false;
    }
  }
  return true;
}

bool WireState::invertible() const {
  std::vector<BitVec> m = rows_;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r) {
      if (m[static_cast<size_t>(r)].test(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
    for (int r = 0; r < n_; ++r) {
      if (r != rank && m[static_cast<size_t>(r)].test(col)) {
        m[static_cast<size_t>(r)] ^= m[static_cast<size_t>(rank)];
      }
    }
    ++rank;
  }
  return rank == n_;
}

std::vector<WireState> simulate_wires(const Circuit& circuit) {
  std::vector<WireState> states;
  states.reserve(circuit.size() + 1);
  WireState s(circuit.qubit_count());
  states.push_back(s);
  for (const Gate& g : circuit.gates()) {
    s.apply(g);
    states.push_back(s);
  }
  return states;
}

ParityNetworkReport is_parity_network(const ParityTable& table, const Circuit& circuit) {
  if (table.qubit_count() != circuit.qubit_count()) {
    throw std::invalid_argument("table and circuit qubit counts differ");
  }
  std::unordered_map<BitVec, int, BitVecHash> pending;  // parity -> slot
  for (int c : table.live_slots()) pending.emplace(table.column_bits(c), c);

  WireState s(circuit.qubit_count());
  for (int q = 1; q <= circuit.qubit_count() && !pending.empty(); ++q) {
    pending.erase(s.wire(q));
  }
  for (const Gate& g : circuit.gates()) {
    if (pending.empty()) break;
    if (g.kind != Gate::Kind::Cnot) continue;
    s.apply(g);
    pending.erase(s.wire(g.target));
  }

  ParityNetworkReport report;
  report.ok = pending.empty();
  if (!report.ok) {
    std::vector<std::pair<int, BitVec>> ordered;
    for (const auto& [bits, slot] : pending) ordered.emplace_back(slot, bits);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [slot, bits] : ordered) report.missing.push_back(std::move(bits));
  }
  return report;
}

TopologyReport respects_topology(const Circuit& circuit, const Topology& topo) {
  TopologyReport report;
  report.ok = true;
  for (const Gate& g : circuit.gates()) {
    if (g.kind != Gate::Kind::Cnot) continue;
    if (g.control > topo.vertex_count() || g.target > topo.vertex_count() ||
        !topo.has_edge(g.control, g.target)) {
      report.ok = false;
      report.offending.push_back(g);
    }
  }
  return report;
}

PhaseReport functional_equivalence(const Circuit& circuit, const ParityTable& table) {
  int n = circuit.qubit_count();
  if (table.qubit_count() != n) {
    throw std::invalid_argument("table and circuit qubit counts differ");
  }
  if (n > 12) throw std::invalid_argument("functional equivalence guarded to 12 qubits");

  // columns as variable masks (bit q-1 = qubit q), with their angles
  std::vector<std::pair<uint64_t, double>> terms;
  for (int c : table.live_slots()) {
    auto angle = table.column_angle(c);
    if (!angle.has_value() || *angle == 0.0) continue;
    uint64_t mask = 0;
    table.column_bits(c).for_each_set([&](int b) { mask |= uint64_t{1} << b; });
    terms.emplace_back(mask, *angle);
  }

  constexpr double two_pi = 2.0 * std::numbers::pi;
  PhaseReport report;
  report.ok = true;
  report.linear_map = WireState(n);
  for (const Gate& g : circuit.gates()) report.linear_map.apply(g);

  std::vector<char> value(static_cast<size_t>(n) + 1, 0);
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    for (int q = 1; q <= n; ++q) value[static_cast<size_t>(q)] = (x >> (q - 1)) & 1u;
    double phase = 0.0;
    for (const Gate& g : circuit.gates()) {
      if (g.kind == Gate::Kind::Cnot) {
        value[static_cast<size_t>(g.target)] ^= value[static_cast<size_t>(g.control)];
      } else if (value[static_cast<size_t>(g.qubit)]) {
        phase += g.angle;
      }
    }
    double expected = 0.0;
    for (auto [mask, angle] : terms) {
      if (std::popcount(mask & x) & 1) expected += angle;
    }
    double diff = std::remainder(phase - expected, two_pi);
    if (std::fabs(diff) > kPhaseTolerance) {
      report.ok = false;
      report.counterexample = x;
      return report;
    }
  }
  return report;
}

}  // namespace pns
