#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace fairsplit {

inline constexpr int kMaxVertices = 64;

/// Set of vertex labels drawn from 1..64, stored as a bitmask (label v is bit v-1).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> labels) {
    for (int v : labels) insert(v);
  }

  static VertexSet from_labels(const std::vector<int>& labels) {
    VertexSet s;
    for (int v : labels) s.insert(v);
    return s;
  }
  /// {1, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest label; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest label; 0 for the empty set.
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order on the ascending label sequences.
  friend bool lex_less(VertexSet a, VertexSet b) {
    const auto la = a.labels();
    const auto lb = b.labels();
    return la < lb;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace fairsplit
