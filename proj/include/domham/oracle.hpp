#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "domham/dominating.hpp"

namespace domham {

/// Four independent checks of a claimed Hamilton path of D(g). The expected
/// count comes from a plain scan over all subsets of the active vertices, not
/// from enumerate_dominating_sets.
struct VerifyReport {
  bool all_dominating = true;
  bool all_distinct = true;
  bool unit_steps = true;
  bool complete = true;
  std::optional<std::size_t> first_not_dominating;
  std::optional<std::size_t> first_repeat;
  /// Index i such that steps i and i+1 are not at Hamming distance 1.
  std::optional<std::size_t> first_bad_step;
  std::size_t expected_count = 0;
  std::size_t actual_count = 0;

  bool pass() const { return all_dominating && all_distinct && unit_steps && complete; }
};

VerifyReport verify_hamilton_path(const Graph& g, const HamPath& p);

/// Number of dominating sets of g by exhaustive subset scan.
std::size_t count_dominating_sets_naive(const Graph& g);

enum class SearchStatus { Found, NotExists, BudgetExceeded };

const char* to_string(SearchStatus s);

enum class NeighborOrder {
  /// Ascending bit-vector order.
  Ascending,
  /// Fewest unvisited neighbors first, ties ascending.
  FewestExitsFirst,
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  /// Start only in the larger parity class; reject outright when the classes
  /// differ by more than one.
  bool parity_pruning = true;
  /// Backtrack when some unvisited node can no longer be reached, or when
  /// two unvisited nodes both would have to be the final endpoint.
  bool dead_end_pruning = true;
  /// Backtrack when the unvisited nodes are not all reachable from the
  /// current node through unvisited nodes.
  bool connectivity_pruning = true;
  NeighborOrder order = NeighborOrder::FewestExitsFirst;
};

struct SearchResult {
  SearchStatus status;
  HamPath path;
  std::uint64_t expansions = 0;
};

/// Exhaustive depth-first Hamilton path search over every start node (in
/// ascending order). Deterministic for fixed options.
SearchResult brute_force_hamilton_path(const DomGraph& dg, const SearchOptions& opts = {});

struct ParityReport {
  std::size_t count = 0;
  bool odd = false;
  std::size_t even_class = 0;
  std::size_t odd_class = 0;

  bool classes_unequal() const { return even_class != odd_class; }
};

ParityReport parity_check(const DomGraph& dg);
ParityReport parity_check(const Graph& g, std::size_t budget = kDefaultNodeBudget);

}  // namespace domham
