#include "domham/reduction.hpp"

#include <algorithm>

#include "domham/error.hpp"

namespace domham {

const char* to_string(OpKind kind) { return kind == OpKind::OpI ? "OpI" : "OpII"; }

std::string describe(const Reduction& r) {
  std::string s = to_string(r.kind);
  s += "(u=" + std::to_string(r.u) + ", v=" + std::to_string(r.v);
  s += r.kind == OpKind::OpI ? ", x=" : ", w=";
  s += std::to_string(r.third) + ")";
  return s;
}

bool is_valid_reduction(const Graph& h, const Reduction& r) {
  const int u = r.u, v = r.v, t = r.third;
  if (!h.is_active(u) || !h.is_active(v) || !h.is_active(t)) return false;
  if (u == v || u == t || v == t) return false;
  if (r.kind == OpKind::OpI) {
    VertexSet x = VertexSet::single(t);
    return h.neighbors(u) == x && h.neighbors(v) == x;
  }
  return h.neighbors(v) == VertexSet::of({u, t}) && h.neighbors(t) == VertexSet::single(v);
}

namespace {

void require_valid(const Graph& h, const Reduction& r, OpKind expected) {
  if (r.kind != expected || !is_valid_reduction(h, r))
    throw Error(ErrorKind::InvalidInput, describe(r) + " is not valid in this graph");
}

struct RootedView {
  std::vector<int> parent;
  std::vector<int> depth;
};

// BFS over `allowed` from `root`.
RootedView root_at(const Graph& g, int root, VertexSet allowed) {
  RootedView rv{std::vector<int>(kMaxVertices, -1), std::vector<int>(kMaxVertices, -1)};
  rv.depth[root] = 0;
  std::vector<int> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    (g.neighbors(a) & allowed).for_each([&](int b) {
      if (rv.depth[b] < 0) {
        rv.depth[b] = rv.depth[a] + 1;
        rv.parent[b] = a;
        queue.push_back(b);
      }
    });
  }
  return rv;
}

// Deepest-leaf rule on the subtree `part` rooted at `root`. Returns nullopt
// when the deepest leaf hangs directly off the root with no sibling leaf.
std::optional<Reduction> deepest_leaf_reduction(const Graph& g, int root, VertexSet part) {
  RootedView rv = root_at(g, root, part);
  int leaf = -1;
  (part.without(root)).for_each([&](int v) {
    if (leaf < 0 || rv.depth[v] > rv.depth[leaf]) leaf = v;
  });
  if (leaf < 0) return std::nullopt;
  const int p = rv.parent[leaf];
  // All children of p are leaves since `leaf` is deepest.
  VertexSet children;
  (g.neighbors(p) & part).for_each([&](int c) {
    if (rv.parent[c] == p) children = children.with(c);
  });
  VertexSet siblings = children.without(leaf);
  if (!siblings.empty()) {
    int other = siblings.min();
    return Reduction::op1(std::min(leaf, other), std::max(leaf, other), p);
  }
  if (p == root) return std::nullopt;
  return Reduction::op2(rv.parent[p], p, leaf);
}

}  // namespace

Reduction find_reduction(const Graph& tree) {
  if (!tree.is_tree()) throw Error(ErrorKind::InvalidInput, "graph is not a tree");
  if (tree.active_count() < 3)
    throw Error(ErrorKind::Underflow, "find_reduction needs at least 3 vertices");
  int root = -1;
  tree.active().for_each([&](int v) {
    if (root < 0 && tree.degree(v) >= 2) root = v;
  });
  auto r = deepest_leaf_reduction(tree, root, tree.active());
  if (!r || !is_valid_reduction(tree, *r))
    throw Error(ErrorKind::ConstructionFailed, "no reduction found in tree");
  return *r;
}

Graph apply_op1(const Graph& h, const Reduction& r) {
  require_valid(h, r, OpKind::OpI);
  return h.without(r.v);
}

Graph apply_op2(const Graph& h, const Reduction& r) {
  require_valid(h, r, OpKind::OpII);
  return h.without(VertexSet::of({r.v, r.third}));
}

Graph apply_reduction(const Graph& h, const Reduction& r) {
  return r.kind == OpKind::OpI ? apply_op1(h, r) : apply_op2(h, r);
}

ReductionTrace reduce_tree_to_base(const Graph& tree) {
  if (!tree.is_tree()) throw Error(ErrorKind::InvalidInput, "graph is not a tree");
  ReductionTrace trace{tree, {}};
  while (trace.base().active_count() > 2) {
    Reduction r = find_reduction(trace.base());
    Graph next = apply_reduction(trace.base(), r);
    trace.steps.push_back({r, std::move(next)});
  }
  return trace;
}

ReductionTrace reduce_unicyclic(const Graph& g) {
  if (!g.is_unicyclic()) throw Error(ErrorKind::InvalidInput, "graph is not unicyclic");
  const std::vector<int> cycle = cycle_order(g);
  VertexSet on_cycle;
  for (int c : cycle) on_cycle = on_cycle.with(c);

  ReductionTrace trace{g, {}};
  for (int c : std::vector<int>(cycle.begin(), cycle.end())) {
    for (;;) {
      const Graph& cur = trace.base();
      // Pendant tree at c: c plus everything reachable without using cycle edges.
      VertexSet part = VertexSet::single(c);
      for (VertexSet frontier = part; !frontier.empty();) {
        VertexSet next;
        frontier.for_each([&](int a) { next |= cur.neighbors(a) - on_cycle; });
        frontier = next - part;
        part |= frontier;
      }
      if (part.size() == 1) break;
      auto r = deepest_leaf_reduction(cur, c, part);
      if (!r || r->deleted().intersects(on_cycle) || !is_valid_reduction(cur, *r))
        throw Error(ErrorKind::NotReducible,
                    "pendant tree " + to_set_string(part) + " at cycle vertex " +
                        std::to_string(c) + " is not reducible to its attachment vertex");
      Graph next = apply_reduction(cur, *r);
      trace.steps.push_back({*r, std::move(next)});
    }
  }
  return trace;
}

}  // namespace domham
