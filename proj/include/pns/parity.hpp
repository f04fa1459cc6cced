#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pns/bitvec.hpp"

namespace pns {

// One parity column: a nonzero GF(2) vector over the qubits, optionally
// carrying a rotation angle in radians. Qubit q maps to bit q-1.
struct Parity {
  BitVec bits;
  std::optional<double> angle;

  Parity() = default;
  explicit Parity(BitVec b, std::optional<double> a = std::nullopt)
      : bits(std::move(b)), angle(a) {}
  static Parity from_string(std::string_view s, std::optional<double> a = std::nullopt) {
    return Parity(BitVec::from_string(s), a);
  }
};

int hamming_weight(const Parity& p);

// Qubit indices (1-based) where the parity has a 1.
std::vector<int> support(const Parity& p);

// Integer value of the parity with qubit 1 as the most significant bit.
// Only defined for up to 64 qubits; parity_key_less covers the general case.
uint64_t parity_key(const Parity& p);

// Strict total order on parities of equal length matching parity_key.
bool parity_key_less(const Parity& a, const Parity& b);
bool parity_key_less(const BitVec& a, const BitVec& b);

// n x m GF(2) matrix, rows = qubits, columns = parities. Stored row-major
// so that row additions and row-pair weights are word-parallel over the
// columns. Columns are removed logically via a live mask; a dead column's
// bits keep evolving under row additions but are excluded from every count.
class ParityTable {
 public:
  ParityTable(int qubit_count, std::vector<Parity> columns);

  // `.ptab` text: a `qubits <n>` line, then one column per line as an
  // n-character bitstring (leftmost char = qubit 1) with an optional angle.
  static ParityTable parse_ptab(std::string_view text);
  std::string to_ptab() const;

  int qubit_count() const { return n_; }
  // Columns still live.
  int live_count() const { return live_count_; }
  // All column slots, dead ones included (slots never move).
  int slot_count() const { return total_; }
  bool empty() const { return live_count_ == 0; }
  bool is_live(int slot) const;
  std::vector<int> live_slots() const;

  Parity column(int slot) const;
  BitVec column_bits(int slot) const;
  std::optional<double> column_angle(int slot) const;
  int column_weight(int slot) const;
  std::vector<int> column_support(int slot) const;

  // Row addition P_i ^= P_j (the table-side effect of CNOT with control i,
  // target j). Qubits are 1-indexed; i != j.
  void row_add(int qubit_i, int qubit_j);

  void remove_column(int slot);

  const BitVec& live_mask() const { return live_; }
  // live columns restricted to the first `count` live slots
  BitVec front_mask(int count) const;

  // h(P_i) counting only columns selected by `mask`.
  int row_weight(int qubit, const BitVec& mask) const;
  // h(P_i ^ P_j) counting only columns selected by `mask`.
  int xor_row_weight(int qubit_i, int qubit_j, const BitVec& mask) const;

 private:
  int n_ = 0;
  int total_ = 0;
  int live_count_ = 0;
  std::vector<BitVec> rows_;    // n entries of total_ bits
  BitVec live_;                 // total_ bits
  std::vector<std::optional<double>> angles_;
  std::vector<int> col_weight_;  // maintained incrementally by row_add

  void check_qubit(int q) const;
  void check_slot(int slot) const;
};

// Sum of column weights over live columns.
int hamming_weight(const ParityTable& table);

}  // namespace pns
