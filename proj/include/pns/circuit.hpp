#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pns/parity.hpp"

namespace pns {

struct Gate {
  enum class Kind { Cnot, Rz };
  Kind kind = Kind::Cnot;
  int control = 0;  // Cnot
  int target = 0;   // Cnot
  int qubit = 0;    // Rz
  double angle = 0.0;

  static Gate cnot(int control, int target) {
    Gate g;
    g.kind = Kind::Cnot;
    g.control = control;
    g.target = target;
    return g;
  }
  static Gate rz(int qubit, double angle) {
    Gate g;
    g.kind = Kind::Rz;
    g.qubit = qubit;
    g.angle = angle;
    return g;
  }
  bool operator==(const Gate&) const = default;
};

// Ordered list of CNOT/RZ gates over 1-indexed qubits.
class Circuit {
 public:
  explicit Circuit(int qubit_count);

  int qubit_count() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  size_t size() const { return gates_.size(); }

  void append_cnot(int control, int target);
  void append_rz(int qubit, double angle);

  int cnot_count() const { return cnot_count_; }
  // Longest chain of CNOTs under the shares-a-qubit conflict relation
  // (ASAP layering); RZ gates are transparent.
  int cnot_depth() const;

  // One line per gate: `cnot <control> <target>` / `rz <angle> <qubit>`.
  std::string to_gatelist() const;
  // OpenQASM 2.0, 0-indexed.
  std::string to_qasm2() const;
  // Inverse of to_gatelist. With qubit_count = 0 the width is inferred from
  // the largest index mentioned.
  static Circuit parse_gatelist(std::string_view text, int qubit_count = 0);

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
  int cnot_count_ = 0;

  void check_qubit(int q) const;
};

// For each column of `table` carrying a nonzero angle, inserts an RZ gate on
// the wire at the earliest point where that wire carries the column's parity
// (the inputs count as the earliest point). CNOT order is unchanged. Throws
// if some column never appears, naming the missing parity.
Circuit insert_rotations(const Circuit& network, const ParityTable& table);

}  // namespace pns
