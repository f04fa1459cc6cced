#include "pns/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pns {

namespace {

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

Circuit::Circuit(int qubit_count) : n_(qubit_count) {
  if (n_ < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

void Circuit::append_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("cnot control and target must differ");
  }
  gates_.push_back(Gate::cnot(control, target));
  ++cnot_count_;
}

void Circuit::append_rz(int qubit, double angle) {
  check_qubit(qubit);
  gates_.push_back(Gate::rz(qubit, angle));
}

int Circuit::cnot_depth() const {
  std::vector<int> layer(static_cast<size_t>(n_) + 1, 0);
  int depth = 0;
  for (const Gate& g : gates_) {
    if (g.kind != Gate::Kind::Cnot) continue;
    int d = std::max(layer[static_cast<size_t>(g.control)],
                     layer[static_cast<size_t>(g.target)]) + 1;
    layer[static_cast<size_t>(g.control)] = d;
    layer[static_cast<size_t>(g.target)] = d;
    depth = std::max(depth, d);
  }
  return depth;
}

std::string Circuit::to_gatelist() const {
  std::string out;
  for (const Gate& g : gates_) {
    if (g.kind == Gate::Kind::Cnot) {
      out += "cnot " + std::to_string(g.control) + ' ' + std::to_string(g.target) + '\n';
    } else {
      out += "rz " + format_angle(g.angle) + ' ' + std::to_string(g.qubit) + '\n';
    }
  }
  return out;
}

std::string Circuit::to_qasm2() const {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                    std::to_string(n_) + "];\n";
  for (const Gate& g : gates_) {
    if (g.kind == Gate::Kind::Cnot) {
      out += "cx q[" + std::to_string(g.control - 1) + "],q[" +
             std::to_string(g.target - 1) + "];\n";
    } else {
      out += "rz(" + format_angle(g.angle) + ") q[" + std::to_string(g.qubit - 1) + "];\n";
    }
  }
  return out;
}

Circuit Circuit::parse_gatelist(std::string_view text, int qubit_count) {
  struct Parsed {
    Gate gate;
    int lineno;
  };
  std::vector<Parsed> parsed;
  int max_index = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    Gate g;
    if (op == "cnot") {
      int c = 0, t = 0;
      if (!(ls >> c >> t) || c < 1 || t < 1 || c == t) {
        throw std::runtime_error("gatelist line " + std::to_string(lineno) +
                                 ": expected 'cnot <control> <target>'");
      }
      g = Gate::cnot(c, t);
      max_index = std::max({max_index, c, t});
    } else if (op == "rz") {
      double a = 0.0;
      int q = 0;
      if (!(ls >> a >> q) || q < 1) {
        throw std::runtime_error("gatelist line " + std::to_string(lineno) +
                                 ": expected 'rz <angle> <qubit>'");
      }
      g = Gate::rz(q, a);
      max_index = std::max(max_index, q);
    } else {
      throw std::runtime_error("gatelist line " + std::to_string(lineno) +
                               ": unknown gate '" + op + "'");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::runtime_error("gatelist line " + std::to_string(lineno) + ": trailing tokens");
    }
    parsed.push_back({g, lineno});
  }
  int n = qubit_count > 0 ? qubit_count : std::max(max_index, 1);
  Circuit circuit(n);
  for (const Parsed& p : parsed) {
    if (p.gate.kind == Gate::Kind::Cnot) {
      if (p.gate.control > n || p.gate.target > n) {
        throw std::runtime_error("gatelist line " + std::to_string(p.lineno) +
                                 ": qubit index exceeds circuit width");
      }
      circuit.append_cnot(p.gate.control, p.gate.target);
    } else {
      if (p.gate.qubit > n) {
        throw std::runtime_error("gatelist line " + std::to_string(p.lineno) +
                                 ": qubit index exceeds circuit width");
      }
      circuit.append_rz(p.gate.qubit, p.gate.angle);
    }
  }
  return circuit;
}

void Circuit::check_qubit(int q) const {
  if (q < 1 || q > n_) throw std::out_of_range("qubit index out of range");
}

Circuit insert_rotations(const Circuit& network, const ParityTable& table) {
  int n = network.qubit_count();
  if (table.qubit_count() != n) {
    throw std::invalid_argument("table and circuit qubit counts differ");
  }

  // Angled columns still waiting for their first appearance.
  std::unordered_map<BitVec, std::pair<int, double>, BitVecHash> pending;
  std::vector<int> pending_order;
  for (int c : table.live_slots()) {
    auto angle = table.column_angle(c);
    if (angle.has_value() && *angle != 0.0) {
      pending.emplace(table.column_bits(c), std::make_pair(c, *angle));
      pending_order.push_back(c);
    }
  }

  Circuit out(n);
  std::vector<BitVec> wire(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    wire[static_cast<size_t>(q)] = BitVec(n);
    wire[static_cast<size_t>(q)].set(q);
  }

  struct Hit {
    int column;
    int qubit;
    double angle;
  };
  auto match_wire = [&](int q, std::vector<Hit>& hits) {
    auto it = pending.find(wire[static_cast<size_t>(q - 1)]);
    if (it != pending.end()) {
      hits.push_back({it->second.first, q, it->second.second});
      pending.erase(it);
    }
  };
  auto emit_hits = [&](std::vector<Hit>& hits) {
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
      return a.column < b.column;
    });
    for (const Hit& h : hits) out.append_rz(h.qubit, h.angle);
    hits.clear();
  };

  std::vector<Hit> hits;
  for (int q = 1; q <= n; ++q) match_wire(q, hits);
  emit_hits(hits);

  for (const Gate& g : network.gates()) {
    if (g.kind == Gate::Kind::Cnot) {
      out.append_cnot(g.control, g.target);
      wire[static_cast<size_t>(g.target - 1)] ^= wire[static_cast<size_t>(g.control - 1)];
      match_wire(g.target, hits);
      emit_hits(hits);
    } else {
      out.append_rz(g.qubit, g.angle);
    }
  }

  if (!pending.empty()) {
    for (int c : pending_order) {
      BitVec bits = table.column_bits(c);
      if (pending.count(bits)) {
        throw std::runtime_error("circuit is not a parity network for the table: parity " +
                                 bits.to_string() + " never appears");
      }
    }
  }
  return out;
}

}  // namespace pns
