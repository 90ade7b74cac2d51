#pragma once

#include "domham/dominating.hpp"
#include "domham/reduction.hpp"

namespace domham {

/// P_1 on {a} -> [{a}]; P_2 on {a,b}, a<b -> [{a},{a,b},{b}].
HamPath base_path(const Graph& g);

/// Lifts a Hamilton path of D(trace.base()) back to D(trace.start), walking
/// the steps last to first.
HamPath lift_through_trace(const ReductionTrace& trace, HamPath base,
                           std::size_t budget = kDefaultNodeBudget);

/// Hamilton path of D(t) for a tree t.
HamPath hamilton_path_tree(const Graph& t, std::size_t budget = kDefaultNodeBudget);

}  // namespace domham
