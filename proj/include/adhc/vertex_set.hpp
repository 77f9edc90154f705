#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace adhc {

// Hard cap on vertex counts: every vertex set and adjacency row is a single
// 64-bit word, which keeps the solver and subset-enumeration inner loops at
// one popcount/and per probe.
inline constexpr int kMaxVertices = 64;

inline std::uint64_t bit_of(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Iterates the set bit positions of a word in ascending order.
class SetBits {
 public:
  explicit SetBits(std::uint64_t word) : word_(word) {}

  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& other) const { return rest_ != other.rest_; }

   private:
    std::uint64_t rest_;
  };

  iterator begin() const { return iterator(word_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t word_;
};

inline SetBits set_bits(std::uint64_t word) { return SetBits(word); }

// A subset of {0,...,universe-1} stored as a bit vector.
struct VertexSet {
  std::uint64_t bits = 0;
  int universe = 0;

  VertexSet() = default;
  explicit VertexSet(int n) : universe(check_universe(n)) {}
  VertexSet(int n, std::uint64_t raw) : bits(raw & low_mask(check_universe(n))), universe(n) {}
  VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
    for (int v : vs) add(v);
  }

  static VertexSet all(int n) { return VertexSet(n, low_mask(n)); }

  bool contains(int v) const { return v >= 0 && v < universe && (bits & bit_of(v)); }

  VertexSet& add(int v) {
    if (v < 0 || v >= universe) throw std::out_of_range("VertexSet::add: vertex out of range");
    bits |= bit_of(v);
    return *this;
  }

  VertexSet& remove(int v) {
    if (v >= 0 && v < universe) bits &= ~bit_of(v);
    return *this;
  }

  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  VertexSet complement() const { return VertexSet(universe, ~bits & low_mask(universe)); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : set_bits(bits)) out.push_back(v);
    return out;
  }

  friend VertexSet operator|(const VertexSet& x, const VertexSet& y) {
    return VertexSet(std::max(x.universe, y.universe), x.bits | y.bits);
  }
  friend VertexSet operator&(const VertexSet& x, const VertexSet& y) {
    return VertexSet(std::max(x.universe, y.universe), x.bits & y.bits);
  }
  friend VertexSet operator-(const VertexSet& x, const VertexSet& y) {
    return VertexSet(x.universe, x.bits & ~y.bits);
  }
  bool operator==(const VertexSet& other) const {
    return bits == other.bits && universe == other.universe;
  }

 private:
  static int check_universe(int n) {
    if (n < 0 || n > kMaxVertices) throw std::out_of_range("VertexSet: universe outside [0,64]");
    return n;
  }
};

}  // namespace adhc
