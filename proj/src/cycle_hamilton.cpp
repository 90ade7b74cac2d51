#include "domham/cycle_hamilton.hpp"

#include "domham/error.hpp"

namespace domham {

namespace {

void check_width(int n, int lo) {
  if (n < lo || n > kMaxGrayWidth)
    throw Error(ErrorKind::InvalidInput, "width " + std::to_string(n) + " outside " +
                                             std::to_string(lo) + ".." +
                                             std::to_string(kMaxGrayWidth));
}

// Bit i of `word` moves to bit n-1-i.
VertexSet::Word reverse_bits(VertexSet::Word word, int n) {
  VertexSet::Word out = 0;
  for (int i = 0; i < n; ++i)
    if ((word >> i) & 1U) out |= VertexSet::Word{1} << (n - 1 - i);
  return out;
}

}  // namespace

VertexSet brgc_at(std::uint32_t k, int n) { return VertexSet(reverse_bits(k ^ (k >> 1), n)); }

std::vector<VertexSet> brgc(int n) {
  check_width(n, 1);
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << n);
  for_each_brgc(n, [&](VertexSet s) { out.push_back(s); });
  return out;
}

bool no_circular_gap(VertexSet s, int n) {
  const VertexSet::Word full = VertexSet::prefix(n).bits();
  const VertexSet::Word b = s.bits();
  const VertexSet::Word left = ((b << 1) | (b >> (n - 1))) & full;
  const VertexSet::Word right = ((b >> 1) | (b << (n - 1))) & full;
  return (b | left | right) == full;
}

std::vector<VertexSet> filter_circular(std::span<const VertexSet> seq, int n) {
  check_width(n, 3);
  std::vector<VertexSet> out;
  for (VertexSet s : seq)
    if (no_circular_gap(s, n)) out.push_back(s);
  return out;
}

std::vector<VertexSet> filtered_brgc(int n) {
  check_width(n, 3);
  std::vector<VertexSet> out;
  for_each_brgc(n, [&](VertexSet s) {
    if (no_circular_gap(s, n)) out.push_back(s);
  });
  return out;
}

std::optional<std::size_t> first_gray_violation(std::span<const VertexSet> seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (hamming(seq[i], seq[i + 1]) != 1) return i;
  return std::nullopt;
}

std::variant<HamPath, NonExistence> hamilton_path_cycle(int n) {
  check_width(n, 3);
  if (n % 4 == 0)
    return NonExistence{"D(C_" + std::to_string(n) + ") has no Hamilton path: n is a multiple of 4"};
  HamPath p = filtered_brgc(n);
  if (auto bad = first_gray_violation(p))
    throw Error(ErrorKind::ConstructionFailed,
                "filtered reflected code breaks the Gray property at index " +
                    std::to_string(*bad));
  return p;
}

std::variant<HamPath, NonExistence> hamilton_path_cycle_graph(const Graph& g) {
  if (!g.is_cycle()) throw Error(ErrorKind::InvalidInput, "graph is not a cycle");
  const std::vector<int> order = cycle_order(g);
  auto result = hamilton_path_cycle(static_cast<int>(order.size()));
  if (auto* p = std::get_if<HamPath>(&result)) {
    for (VertexSet& s : *p) {
      VertexSet mapped;
      s.for_each([&](int i) { mapped = mapped.with(order[i]); });
      s = mapped;
    }
  }
  return result;
}

}  // namespace domham
