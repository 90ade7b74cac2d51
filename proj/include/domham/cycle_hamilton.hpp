#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "domham/graph.hpp"

namespace domham {

inline constexpr int kMaxGrayWidth = 24;

/// Reflected Gray code word for position k, as a string x_0..x_{n-1} whose
/// leftmost symbol x_0 is the most significant bit of k ^ (k >> 1).
VertexSet brgc_at(std::uint32_t k, int n);

/// Streams the 2^n reflected Gray code strings of width n in order.
template <typename F>
void for_each_brgc(int n, F&& f);

/// The full 2^n sequence, starting at all zeros.
std::vector<VertexSet> brgc(int n);

/// True iff no circular window x_{i-1} x_i x_{i+1} equals 000, i.e. the
/// string is a dominating set of C_n.
bool no_circular_gap(VertexSet s, int n);

/// Keeps the strings without a circular 000 window, order preserved.
std::vector<VertexSet> filter_circular(std::span<const VertexSet> seq, int n);

/// filter_circular(brgc(n)) without materializing the unfiltered sequence.
std::vector<VertexSet> filtered_brgc(int n);

/// Index i of the first pair (seq[i], seq[i+1]) not at Hamming distance 1.
std::optional<std::size_t> first_gray_violation(std::span<const VertexSet> seq);

struct NonExistence {
  std::string reason;
};

/// Hamilton path of D(C_n) on the canonical cycle 0-1-...-(n-1)-0, or
/// NonExistence when n is a multiple of 4.
std::variant<HamPath, NonExistence> hamilton_path_cycle(int n);

/// Same for any graph that is a cycle, relabeled along cycle_order(g).
std::variant<HamPath, NonExistence> hamilton_path_cycle_graph(const Graph& g);

template <typename F>
void for_each_brgc(int n, F&& f) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) f(brgc_at(static_cast<std::uint32_t>(k), n));
}

}  // namespace domham
