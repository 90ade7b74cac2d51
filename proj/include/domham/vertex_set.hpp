#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace domham {

inline constexpr int kMaxVertices = 30;

/// Subset of vertex labels 0..kMaxVertices-1, bit i set iff vertex i is a
/// member. Ordering is numeric order of the underlying word.
class VertexSet {
 public:
  using Word = std::uint32_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> members);
  static constexpr VertexSet single(int v) { return VertexSet(Word{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 32 ? ~Word{0} : (Word{1} << n) - 1);
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (Word{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(Word{1} << v)); }
  constexpr VertexSet toggled(int v) const { return VertexSet(bits_ ^ (Word{1} << v)); }

  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 31 - std::countl_zero(bits_); }

  std::vector<int> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (Word b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  Word bits_ = 0;
};

/// Size of the symmetric difference.
constexpr int hamming(VertexSet a, VertexSet b) { return (a ^ b).size(); }

/// x_0 x_1 ... x_{width-1}, vertex 0 leftmost.
std::string to_binary_string(VertexSet s, int width);
/// "{0,3,4}"
std::string to_set_string(VertexSet s);

/// Ordered sequence of dominating sets claimed to be a Hamilton path of D(H).
using HamPath = std::vector<VertexSet>;

}  // namespace domham

template <>
struct std::hash<domham::VertexSet> {
  std::size_t operator()(domham::VertexSet s) const noexcept {
    return std::hash<domham::VertexSet::Word>{}(s.bits());
  }
};
