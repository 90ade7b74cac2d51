#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "domham/graph.hpp"

namespace domham {

inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 22;

/// True iff every active vertex outside `s` has a neighbor in `s`.
/// Throws InvalidInput if `s` contains an inactive label.
bool is_dominating(const Graph& g, VertexSet s);

/// All S ⊆ candidates such that every vertex of `targets` lies in S or has a
/// neighbor in S. Ascending order. Throws ResourceLimit once more than
/// `budget` sets would be produced.
std::vector<VertexSet> dominating_subsets(const Graph& g, VertexSet candidates,
                                          VertexSet targets,
                                          std::size_t budget = kDefaultNodeBudget);

/// Every dominating set of `g` exactly once, ascending by bit value.
std::vector<VertexSet> enumerate_dominating_sets(const Graph& g,
                                                 std::size_t budget = kDefaultNodeBudget);

/// The dominating graph D(H): nodes are the dominating sets of the host,
/// two nodes adjacent iff they differ in exactly one vertex.
class DomGraph {
 public:
  DomGraph(Graph host, std::vector<VertexSet> nodes);

  const Graph& host() const { return host_; }
  const std::vector<VertexSet>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  VertexSet node(std::size_t i) const { return nodes_[i]; }

  std::optional<std::size_t> index_of(VertexSet s) const;
  bool adjacent(std::size_t i, std::size_t j) const;
  /// Indices of adjacent nodes, ascending (which is ascending bit order).
  std::vector<std::size_t> neighbors(std::size_t i) const;
  /// Each edge once as (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  Graph host_;
  std::vector<VertexSet> nodes_;
};

DomGraph build_dominating_graph(const Graph& g, std::size_t budget = kDefaultNodeBudget);

}  // namespace domham
