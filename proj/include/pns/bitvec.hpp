#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pns {

// Dynamic GF(2) vector backed by 64-bit words. Bit i lives at word i/64,
// bit i%64; bits past size() are kept zero so whole-word popcounts are safe.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), w_(word_count(nbits), 0) {}

  static BitVec from_string(std::string_view s) {
    BitVec v(static_cast<int>(s.size()));
    for (int i = 0; i < v.nbits_; ++i) {
      char c = s[static_cast<size_t>(i)];
      if (c == '1') {
        v.set(i);
      } else if (c != '0') {
        throw std::invalid_argument("bit string must contain only 0/1");
      }
    }
    return v;
  }

  int size() const { return nbits_; }

  bool test(int i) const {
    check_index(i);
    return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u;
  }

  void set(int i, bool value = true) {
    check_index(i);
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      w_[static_cast<size_t>(i >> 6)] |= mask;
    } else {
      w_[static_cast<size_t>(i >> 6)] &= ~mask;
    }
  }

  void flip(int i) {
    check_index(i);
    w_[static_cast<size_t>(i >> 6)] ^= uint64_t{1} << (i & 63);
  }

  bool any() const {
    for (uint64_t w : w_) {
      if (w != 0) return true;
    }
    return false;
  }

  bool none() const { return !any(); }

  int popcount() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  // |this & mask|
  int popcount_and(const BitVec& mask) const {
    check_size(mask);
    int c = 0;
    for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & mask.w_[k]);
    return c;
  }

  // |(this ^ other) & mask| without materializing the xor
  int popcount_xor_and(const BitVec& other, const BitVec& mask) const {
    check_size(other);
    check_size(mask);
    int c = 0;
    for (size_t k = 0; k < w_.size(); ++k) {
      c += std::popcount((w_[k] ^ other.w_[k]) & mask.w_[k]);
    }
    return c;
  }

  BitVec& operator^=(const BitVec& other) {
    check_size(other);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVec&) const = default;

  std::string to_string() const {
    std::string s(static_cast<size_t>(nbits_), '0');
    for (int i = 0; i < nbits_; ++i) {
      if (test(i)) s[static_cast<size_t>(i)] = '1';
    }
    return s;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w != 0) {
        int b = std::countr_zero(w);
        f(static_cast<int>(k) * 64 + b);
        w &= w - 1;
      }
    }
  }

  // Total order matching the integer reading with bit 0 as the most
  // significant digit: the vector holding a 1 at the first differing
  // position is the larger one.
  static bool msb0_less(const BitVec& a, const BitVec& b) {
    a.check_size(b);
    for (size_t k = 0; k < a.w_.size(); ++k) {
      uint64_t d = a.w_[k] ^ b.w_[k];
      if (d != 0) {
        int p = std::countr_zero(d);
        return (a.w_[k] >> p & 1u) == 0;
      }
    }
    return false;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

 private:
  static size_t word_count(int nbits) {
    if (nbits < 0) throw std::invalid_argument("negative bit count");
    return static_cast<size_t>(nbits + 63) / 64;
  }
  void check_index(int i) const {
    if (i < 0 || i >= nbits_) throw std::out_of_range("bit index out of range");
  }
  void check_size(const BitVec& other) const {
    if (other.nbits_ != nbits_) throw std::invalid_argument("bit-vector size mismatch");
  }

  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

struct BitVecHash {
  size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace pns
