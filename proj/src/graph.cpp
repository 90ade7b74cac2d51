#include "domham/graph.hpp"

#include <algorithm>
#include <string>

#include "domham/error.hpp"

namespace domham {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorKind::InvalidInput,
                "vertex count " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxVertices));
  active_ = VertexSet::prefix(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

void Graph::check_label(int v) const {
  if (!is_active(v))
    throw Error(ErrorKind::InvalidInput,
                "vertex " + std::to_string(v) + " is not an active vertex");
}

void Graph::add_edge(int u, int v) {
  check_label(u);
  check_label(v);
  if (u == v)
    throw Error(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(u));
  adj_[u] = adj_[u].with(v);
  adj_[v] = adj_[v].with(u);
}

int Graph::edge_count() const {
  int twice = 0;
  active_.for_each([&](int v) { twice += degree(v); });
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  active_.for_each([&](int u) {
    (adj_[u] - VertexSet::prefix(u + 1)).for_each([&](int v) { out.emplace_back(u, v); });
  });
  return out;
}

Graph Graph::without(VertexSet removed) const {
  Graph g = *this;
  g.active_ = active_ - removed;
  removed.for_each([&](int v) {
    if (v < n_) g.adj_[v] = VertexSet{};
  });
  g.active_.for_each([&](int v) { g.adj_[v] = g.adj_[v] - removed; });
  return g;
}

bool Graph::is_connected() const {
  if (active_.empty()) return true;
  VertexSet seen = VertexSet::single(active_.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= adj_[v]; });
    frontier = next - seen;
    seen |= frontier;
  }
  return seen == active_;
}

bool Graph::is_tree() const {
  return active_count() >= 1 && is_connected() && edge_count() == active_count() - 1;
}

bool Graph::is_unicyclic() const {
  return active_count() >= 3 && is_connected() && edge_count() == active_count();
}

bool Graph::is_cycle() const {
  if (!is_unicyclic()) return false;
  bool regular = true;
  active_.for_each([&](int v) { regular = regular && degree(v) == 2; });
  return regular;
}

std::vector<int> cycle_order(const Graph& g) {
  if (!g.is_unicyclic())
    throw Error(ErrorKind::InvalidInput, "graph is not unicyclic");
  // Peel leaves until only the cycle remains.
  Graph core = g;
  for (bool peeled = true; peeled;) {
    peeled = false;
    VertexSet leaves;
    core.active().for_each([&](int v) {
      if (core.degree(v) <= 1) leaves = leaves.with(v);
    });
    if (!leaves.empty()) {
      core = core.without(leaves);
      peeled = true;
    }
  }
  std::vector<int> order;
  int start = core.active().min();
  int prev = start;
  int cur = core.neighbors(start).min();
  order.push_back(start);
  while (cur != start) {
    order.push_back(cur);
    int next = (core.neighbors(cur) - VertexSet::single(prev)).min();
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace domham
