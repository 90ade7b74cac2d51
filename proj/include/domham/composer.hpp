#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "domham/dominating.hpp"

namespace domham {

enum class Method { Auto, Tree, Cycle, Unicyclic, Oracle };

const char* to_string(Method m);
/// Parses "auto", "tree", "cycle", "unicyclic" or "oracle".
Method parse_method(const std::string& name);

enum class OutcomeKind { Path, NonExistence, Unknown };

const char* to_string(OutcomeKind k);

struct Outcome {
  OutcomeKind kind;
  HamPath path;
  /// Pipeline that produced the outcome.
  Method method;
  std::string detail;
};

struct ComposeOptions {
  /// Largest DomGraph the oracle fallback will build.
  std::size_t node_budget = kDefaultNodeBudget;
  /// DFS expansion limit of the oracle fallback.
  std::uint64_t search_budget = 100'000'000;
};

/// Tree, cycle and unicyclic graphs reducible onto a cycle of length not
/// divisible by 4 are handled constructively; everything else goes to the
/// bounded exhaustive search.
Outcome hamilton_path_auto(const Graph& g, const ComposeOptions& opts = {});

/// Forces one pipeline. Throws InvalidInput when the graph is outside the
/// pipeline's class and NotReducible from the unicyclic reducer.
Outcome hamilton_path_with(const Graph& g, Method method, const ComposeOptions& opts = {});

}  // namespace domham
