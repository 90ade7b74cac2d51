#include "domham/tree_hamilton.hpp"

#include "domham/error.hpp"
#include "domham/lifting.hpp"

namespace domham {

HamPath base_path(const Graph& g) {
  const VertexSet act = g.active();
  if (act.size() == 1) return {act};
  if (act.size() == 2 && g.has_edge(act.min(), act.max())) {
    VertexSet a = VertexSet::single(act.min()), b = VertexSet::single(act.max());
    return {a, act, b};
  }
  throw Error(ErrorKind::InvalidInput, "base graph must be P_1 or P_2");
}

HamPath lift_through_trace(const ReductionTrace& trace, HamPath base, std::size_t budget) {
  HamPath p = std::move(base);
  for (std::size_t i = trace.steps.size(); i-- > 0;)
    p = lift(p, trace.before(i), trace.steps[i].reduction, budget);
  return p;
}

HamPath hamilton_path_tree(const Graph& t, std::size_t budget) {
  ReductionTrace trace = reduce_tree_to_base(t);
  HamPath p = lift_through_trace(trace, base_path(trace.base()), budget);
  if (p.size() > budget)
    throw Error(ErrorKind::ResourceLimit, "tree path exceeds node budget");
  return p;
}

}  // namespace domham
