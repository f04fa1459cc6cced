#include "pns/parity.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pns {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroAngleEps = 1e-12;

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

bool is_zero_angle(double a) {
  double r = normalize_angle(a);
  return r < kZeroAngleEps || kTwoPi - r < kZeroAngleEps;
}

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

int hamming_weight(const Parity& p) { return p.bits.popcount(); }

std::vector<int> support(const Parity& p) {
  std::vector<int> s;
  p.bits.for_each_set([&](int b) { s.push_back(b + 1); });
  return s;
}

uint64_t parity_key(const Parity& p) {
  int n = p.bits.size();
  if (n > 64) throw std::invalid_argument("parity_key needs at most 64 qubits");
  uint64_t key = 0;
  for (int q = 0; q < n; ++q) {
    if (p.bits.test(q)) key |= uint64_t{1} << (n - 1 - q);
  }
  return key;
}

bool parity_key_less(const BitVec& a, const BitVec& b) { return BitVec::msb0_less(a, b); }

bool parity_key_less(const Parity& a, const Parity& b) {
  return parity_key_less(a.bits, b.bits);
}

ParityTable::ParityTable(int qubit_count, std::vector<Parity> columns) : n_(qubit_count) {
  if (n_ < 1) throw std::invalid_argument("table needs at least one qubit");

  // Merge duplicate columns: angles add mod 2pi, and a merge that cancels to
  // zero drops the column unless some occurrence was listed without an angle
  // (a plain parity-network entry is always kept).
  struct Merged {
    BitVec bits;
    bool has_plain = false;
    bool has_angle = false;
    double angle_sum = 0.0;
  };
  std::vector<Merged> merged;
  std::unordered_map<BitVec, size_t, BitVecHash> index;
  for (size_t c = 0; c < columns.size(); ++c) {
    const Parity& p = columns[c];
    if (p.bits.size() != n_) {
      throw std::invalid_argument("column " + std::to_string(c + 1) + " has wrong length");
    }
    if (p.bits.none()) {
      throw std::invalid_argument("column " + std::to_string(c + 1) + " is all-zero");
    }
    auto [it, fresh] = index.try_emplace(p.bits, merged.size());
    if (fresh) merged.push_back(Merged{p.bits});
    Merged& m = merged[it->second];
    if (p.angle.has_value()) {
      m.has_angle = true;
      m.angle_sum += *p.angle;
    } else {
      m.has_plain = true;
    }
  }

  std::vector<Parity> kept;
  kept.reserve(merged.size());
  for (Merged& m : merged) {
    if (m.has_angle) {
      double a = normalize_angle(m.angle_sum);
      if (is_zero_angle(a)) {
        if (!m.has_plain) continue;  // fully cancelled rotation, no gate to place
        kept.emplace_back(std::move(m.bits));
      } else {
        kept.emplace_back(std::move(m.bits), a);
      }
    } else {
      kept.emplace_back(std::move(m.bits));
    }
  }

  total_ = static_cast<int>(kept.size());
  live_count_ = total_;
  rows_.assign(static_cast<size_t>(n_), BitVec(total_));
  live_ = BitVec(total_);
  angles_.resize(static_cast<size_t>(total_));
  col_weight_.assign(static_cast<size_t>(total_), 0);
  for (int c = 0; c < total_; ++c) {
    const Parity& p = kept[static_cast<size_t>(c)];
    live_.set(c);
    angles_[static_cast<size_t>(c)] = p.angle;
    p.bits.for_each_set([&](int b) {
      rows_[static_cast<size_t>(b)].set(c);
      ++col_weight_[static_cast<size_t>(c)];
    });
  }
}

ParityTable ParityTable::parse_ptab(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Parity> columns;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      long value = 0;
      if (tok != "qubits" || !(ls >> value) || value < 1) {
        throw std::runtime_error("ptab line " + std::to_string(lineno) +
                                 ": expected 'qubits <n>'");
      }
      n = static_cast<int>(value);
      continue;
    }
    if (static_cast<int>(tok.size()) != n ||
        tok.find_first_not_of("01") != std::string::npos) {
      throw std::runtime_error("ptab line " + std::to_string(lineno) + ": expected " +
                               std::to_string(n) + "-character bitstring");
    }
    Parity p = Parity::from_string(tok);
    std::string angle_tok;
    if (ls >> angle_tok) {
      try {
        size_t used = 0;
        p.angle = std::stod(angle_tok, &used);
        if (used != angle_tok.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::runtime_error("ptab line " + std::to_string(lineno) + ": bad angle '" +
                                 angle_tok + "'");
      }
      if (ls >> angle_tok) {
        throw std::runtime_error("ptab line " + std::to_string(lineno) + ": trailing tokens");
      }
    }
    columns.push_back(std::move(p));
  }
  if (n < 0) throw std::runtime_error("ptab: missing 'qubits <n>' line");
  return ParityTable(n, std::move(columns));
}

std::string ParityTable::to_ptab() const {
  std::string out = "qubits " + std::to_string(n_) + "\n";
  for (int c = 0; c < total_; ++c) {
    if (!live_.test(c)) continue;
    out += column_bits(c).to_string();
    if (angles_[static_cast<size_t>(c)].has_value()) {
      out += ' ';
      out += format_angle(*angles_[static_cast<size_t>(c)]);
    }
    out += '\n';
  }
  return out;
}

bool ParityTable::is_live(int slot) const {
  check_slot(slot);
  return live_.test(slot);
}

std::vector<int> ParityTable::live_slots() const {
  std::vector<int> s;
  s.reserve(static_cast<size_t>(live_count_));
  live_.for_each_set([&](int c) { s.push_back(c); });
  return s;
}

Parity ParityTable::column(int slot) const {
  check_slot(slot);
  return Parity(column_bits(slot), angles_[static_cast<size_t>(slot)]);
}

BitVec ParityTable::column_bits(int slot) const {
  check_slot(slot);
  BitVec bits(n_);
  for (int q = 0; q < n_; ++q) {
    if (rows_[static_cast<size_t>(q)].test(slot)) bits.set(q);
  }
  return bits;
}

std::optional<double> ParityTable::column_angle(int slot) const {
  check_slot(slot);
  return angles_[static_cast<size_t>(slot)];
}

int ParityTable::column_weight(int slot) const {
  check_slot(slot);
  return col_weight_[static_cast<size_t>(slot)];
}

std::vector<int> ParityTable::column_support(int slot) const {
  check_slot(slot);
  std::vector<int> s;
  for (int q = 0; q < n_; ++q) {
    if (rows_[static_cast<size_t>(q)].test(slot)) s.push_back(q + 1);
  }
  return s;
}

void ParityTable::row_add(int qubit_i, int qubit_j) {
  check_qubit(qubit_i);
  check_qubit(qubit_j);
  if (qubit_i == qubit_j) throw std::invalid_argument("row_add needs two distinct qubits");
  BitVec& dst = rows_[static_cast<size_t>(qubit_i - 1)];
  const BitVec& src = rows_[static_cast<size_t>(qubit_j - 1)];
  src.for_each_set([&](int c) {
    col_weight_[static_cast<size_t>(c)] += dst.test(c) ? -1 : 1;
  });
  dst ^= src;
}

void ParityTable::remove_column(int slot) {
  check_slot(slot);
  if (!live_.test(slot)) throw std::invalid_argument("column already removed");
  live_.set(slot, false);
  --live_count_;
}

BitVec ParityTable::front_mask(int count) const {
  BitVec mask(total_);
  int taken = 0;
  for (int c = 0; c < total_ && taken < count; ++c) {
    if (live_.test(c)) {
      mask.set(c);
      ++taken;
    }
  }
  return mask;
}

int ParityTable::row_weight(int qubit, const BitVec& mask) const {
  check_qubit(qubit);
  return rows_[static_cast<size_t>(qubit - 1)].popcount_and(mask);
}

int ParityTable::xor_row_weight(int qubit_i, int qubit_j, const BitVec& mask) const {
  check_qubit(qubit_i);
  check_qubit(qubit_j);
  return rows_[static_cast<size_t>(qubit_i - 1)].popcount_xor_and(
      rows_[static_cast<size_t>(qubit_j - 1)], mask);
}

void ParityTable::check_qubit(int q) const {
  if (q < 1 || q > n_) throw std::out_of_range("qubit index out of range");
}

void ParityTable::check_slot(int slot) const {
  if (slot < 0 || slot >= total_) throw std::out_of_range("column index out of range");
}

int hamming_weight(const ParityTable& table) {
  int total = 0;
  for (int c : table.live_slots()) total += table.column_weight(c);
  return total;
}

}  // namespace pns
