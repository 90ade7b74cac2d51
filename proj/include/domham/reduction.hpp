#pragma once

#include <string>
#include <vector>

#include "domham/graph.hpp"

namespace domham {

enum class OpKind { OpI, OpII };

const char* to_string(OpKind kind);

/// One application of Operation I or II.
///
/// OpI:  N(u) = N(v) = {x}; v is deleted. `third` holds x.
/// OpII: N(v) = {u, w}, N(w) = {v}; v and w are deleted. `third` holds w.
struct Reduction {
  OpKind kind;
  int u;
  int v;
  int third;

  static Reduction op1(int u, int v, int x) { return {OpKind::OpI, u, v, x}; }
  static Reduction op2(int u, int v, int w) { return {OpKind::OpII, u, v, w}; }

  int x() const { return third; }
  int w() const { return third; }
  VertexSet deleted() const {
    return kind == OpKind::OpI ? VertexSet::single(v) : VertexSet::of({v, third});
  }

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

std::string describe(const Reduction& r);

/// Checks the neighborhood conditions of `r` in `h`.
bool is_valid_reduction(const Graph& h, const Reduction& r);

struct ReductionStep {
  Reduction reduction;
  Graph result;
};

/// start, then each step's resulting graph; base() is the last graph.
struct ReductionTrace {
  Graph start;
  std::vector<ReductionStep> steps;

  const Graph& base() const { return steps.empty() ? start : steps.back().result; }
  /// Graph the i-th step was applied to.
  const Graph& before(std::size_t i) const { return i == 0 ? start : steps[i - 1].result; }
};

/// A reduction applicable to a tree with at least 3 vertices. Roots the tree
/// at its smallest non-leaf and looks at the deepest leaf (smallest label on
/// ties): two sibling leaves give OpI, otherwise the leaf's parent has degree
/// 2 and gives OpII.
Reduction find_reduction(const Graph& tree);

Graph apply_op1(const Graph& h, const Reduction& r);
Graph apply_op2(const Graph& h, const Reduction& r);
Graph apply_reduction(const Graph& h, const Reduction& r);

/// Reduces a tree to P_1 or P_2.
ReductionTrace reduce_tree_to_base(const Graph& tree);

/// Strips every pendant tree of a unicyclic graph onto its attachment vertex
/// using only reductions that never delete a cycle vertex. Throws
/// NotReducible naming the first pendant tree that gets stuck.
ReductionTrace reduce_unicyclic(const Graph& g);

}  // namespace domham
