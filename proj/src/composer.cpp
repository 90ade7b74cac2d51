#include "domham/composer.hpp"

#include <variant>

#include "domham/cycle_hamilton.hpp"
#include "domham/error.hpp"
#include "domham/oracle.hpp"
#include "domham/reduction.hpp"
#include "domham/tree_hamilton.hpp"

namespace domham {

const char* to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Tree: return "tree";
    case Method::Cycle: return "cycle";
    case Method::Unicyclic: return "unicyclic";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::Auto, Method::Tree, Method::Cycle, Method::Unicyclic, Method::Oracle})
    if (name == to_string(m)) return m;
  throw Error(ErrorKind::InvalidInput, "unknown method '" + name + "'");
}

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Path: return "path";
    case OutcomeKind::NonExistence: return "nonexistent";
    case OutcomeKind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

Outcome from_cycle(std::variant<HamPath, NonExistence> r, Method m) {
  if (auto* p = std::get_if<HamPath>(&r)) return {OutcomeKind::Path, std::move(*p), m, ""};
  return {OutcomeKind::NonExistence, {}, m, std::get<NonExistence>(r).reason};
}

Outcome by_tree(const Graph& g, const ComposeOptions& opts) {
  return {OutcomeKind::Path, hamilton_path_tree(g, opts.node_budget), Method::Tree, ""};
}

Outcome by_cycle(const Graph& g) { return from_cycle(hamilton_path_cycle_graph(g), Method::Cycle); }

Outcome by_unicyclic(const Graph& g, const ComposeOptions& opts) {
  ReductionTrace trace = reduce_unicyclic(g);
  auto base = hamilton_path_cycle_graph(trace.base());
  if (auto* none = std::get_if<NonExistence>(&base))
    throw Error(ErrorKind::InvalidInput,
                "graph reduces to a cycle of length divisible by 4; " + none->reason);
  HamPath p = lift_through_trace(trace, std::get<HamPath>(std::move(base)), opts.node_budget);
  return {OutcomeKind::Path, std::move(p), Method::Unicyclic,
          "reduced in " + std::to_string(trace.steps.size()) + " steps"};
}

Outcome by_oracle(const Graph& g, const ComposeOptions& opts) {
  std::optional<DomGraph> dg;
  try {
    dg.emplace(build_dominating_graph(g, opts.node_budget));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceLimit) throw;
    return {OutcomeKind::Unknown, {}, Method::Oracle, e.what()};
  }
  SearchOptions so;
  so.budget = opts.search_budget;
  SearchResult r = brute_force_hamilton_path(*dg, so);
  std::string detail = std::to_string(r.expansions) + " expansions";
  switch (r.status) {
    case SearchStatus::Found:
      return {OutcomeKind::Path, std::move(r.path), Method::Oracle, detail};
    case SearchStatus::NotExists:
      return {OutcomeKind::NonExistence, {}, Method::Oracle, "exhausted search, " + detail};
    case SearchStatus::BudgetExceeded:
      break;
  }
  return {OutcomeKind::Unknown, {}, Method::Oracle, "search budget exceeded, " + detail};
}

}  // namespace

Outcome hamilton_path_with(const Graph& g, Method method, const ComposeOptions& opts) {
  switch (method) {
    case Method::Auto: return hamilton_path_auto(g, opts);
    case Method::Tree:
      if (!g.is_tree()) throw Error(ErrorKind::InvalidInput, "graph is not a tree");
      return by_tree(g, opts);
    case Method::Cycle: return by_cycle(g);
    case Method::Unicyclic: return by_unicyclic(g, opts);
    case Method::Oracle: return by_oracle(g, opts);
  }
  throw Error(ErrorKind::InvalidInput, "unknown method");
}

Outcome hamilton_path_auto(const Graph& g, const ComposeOptions& opts) {
  if (g.is_tree()) return by_tree(g, opts);
  if (g.is_cycle()) return by_cycle(g);
  if (g.is_unicyclic()) {
    // Existence transfers up a reduction; non-existence does not, so anything
    // that fails here is left to the search.
    try {
      ReductionTrace trace = reduce_unicyclic(g);
      if (static_cast<int>(trace.base().active_count()) % 4 != 0) return by_unicyclic(g, opts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotReducible) throw;
    }
  }
  return by_oracle(g, opts);
}

}  // namespace domham
