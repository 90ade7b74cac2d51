#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "domham/vertex_set.hpp"

namespace domham {

using Edge = std::pair<int, int>;

/// Simple undirected graph over labels 0..n-1. Deleting vertices marks them
/// inactive; labels are never renumbered, so a set over a subgraph is a valid
/// set over the original label space.
class Graph {
 public:
  Graph() = default;
  /// n isolated active vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Center 0, leaves 1..leaves.
  static Graph star(int leaves);
  static Graph complete(int n);

  void add_edge(int u, int v);

  /// Size of the label space (active or not).
  int label_count() const { return n_; }
  VertexSet active() const { return active_; }
  int active_count() const { return active_.size(); }
  bool is_active(int v) const { return v >= 0 && v < n_ && active_.contains(v); }

  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const { return adj_[v].with(v); }
  int degree(int v) const { return adj_[v].size(); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }

  int edge_count() const;
  /// Each edge once, u < v, sorted.
  std::vector<Edge> edges() const;

  /// Copy with the given vertices (and their edges) deactivated.
  Graph without(VertexSet removed) const;
  Graph without(int v) const { return without(VertexSet::single(v)); }

  bool is_connected() const;
  bool is_tree() const;
  /// Connected with exactly one cycle.
  bool is_unicyclic() const;
  /// Connected, 2-regular, at least 3 vertices.
  bool is_cycle() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_label(int v) const;

  int n_ = 0;
  VertexSet active_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Vertices of the unique cycle of a unicyclic (or cycle) graph, listed in
/// cyclic order starting from the smallest label and continuing towards its
/// smaller cycle neighbor. Throws InvalidInput if `g` is not unicyclic.
std::vector<int> cycle_order(const Graph& g);

}  // namespace domham
