#include "domham/oracle.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace domham {

namespace {

bool dominates_naive(const Graph& g, VertexSet s) {
  for (int v = 0; v < g.label_count(); ++v) {
    if (!g.is_active(v) || s.contains(v)) continue;
    if (!g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

}  // namespace

std::size_t count_dominating_sets_naive(const Graph& g) {
  const VertexSet::Word active = g.active().bits();
  std::size_t count = 0;
  // Walk every submask of the active set, including the empty one.
  VertexSet::Word sub = active;
  for (;;) {
    if (dominates_naive(g, VertexSet(sub))) ++count;
    if (sub == 0) break;
    sub = (sub - 1) & active;
  }
  return count;
}

VerifyReport verify_hamilton_path(const Graph& g, const HamPath& p) {
  VerifyReport r;
  r.actual_count = p.size();
  r.expected_count = count_dominating_sets_naive(g);
  std::unordered_set<VertexSet> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].subset_of(g.active()) || !dominates_naive(g, p[i])) {
      if (r.all_dominating) r.first_not_dominating = i;
      r.all_dominating = false;
    }
    if (!seen.insert(p[i]).second) {
      if (r.all_distinct) r.first_repeat = i;
      r.all_distinct = false;
    }
    if (i + 1 < p.size() && hamming(p[i], p[i + 1]) != 1) {
      if (r.unit_steps) r.first_bad_step = i;
      r.unit_steps = false;
    }
  }
  r.complete = r.actual_count == r.expected_count;
  return r;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotExists: return "not-exists";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

class PathSearch {
 public:
  PathSearch(const DomGraph& dg, const SearchOptions& opts) : dg_(dg), opts_(opts) {
    const std::size_t n = dg.size();
    adj_.resize(n);
    for (std::size_t i = 0; i < n; ++i) adj_[i] = dg.neighbors(i);
    visited_.assign(n, false);
    mark_.assign(n, 0);
  }

  SearchResult run() {
    const std::size_t n = dg_.size();
    SearchResult result{SearchStatus::NotExists, {}, 0};
    if (n == 0) return result;

    ParityReport parity = parity_check(dg_);
    bool even_larger = parity.even_class > parity.odd_class;
    std::size_t diff = even_larger ? parity.even_class - parity.odd_class
                                   : parity.odd_class - parity.even_class;
    if (opts_.parity_pruning && diff > 1) return result;

    std::vector<std::size_t> starts;
    for (std::size_t s = 0; s < n; ++s)
      if (!opts_.parity_pruning || diff != 1 || (dg_.node(s).size() % 2 == 0) == even_larger)
        starts.push_back(s);

    // Round-robin over start nodes with a doubling per-start slice, so one
    // hopeless start cannot starve the others. A start is closed only once its
    // subtree has been exhausted.
    std::vector<bool> closed(starts.size(), false);
    for (std::uint64_t slice = 1024;; slice *= 2) {
      bool open = false;
      for (std::size_t k = 0; k < starts.size(); ++k) {
        if (closed[k]) continue;
        const std::size_t s = starts[k];
        const int start_parity = static_cast<int>(dg_.node(s).size() % 2);
        // A path alternates parity classes, which fixes the class of its far end.
        end_parity_ = opts_.parity_pruning ? (diff == 1 ? start_parity : 1 - start_parity) : -1;
        reset();
        enter(s);
        order_.push_back(s);
        slice_end_ = expansions_ + slice;
        try {
          if (dfs(s)) {
            result.status = SearchStatus::Found;
            for (std::size_t i : order_) result.path.push_back(dg_.node(i));
            result.expansions = expansions_;
            return result;
          }
          closed[k] = true;
        } catch (const SliceHit&) {
          open = true;
        } catch (const BudgetHit&) {
          result.status = SearchStatus::BudgetExceeded;
          result.expansions = expansions_;
          return result;
        }
      }
      if (!open) break;
    }
    result.expansions = expansions_;
    return result;
  }

 private:
  struct BudgetHit {};
  struct SliceHit {};

  void reset() {
    const std::size_t n = dg_.size();
    std::fill(visited_.begin(), visited_.end(), false);
    free_deg_.resize(n);
    zeros_ = ones_ = wrong_ones_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
      free_deg_[i] = adj_[i].size();
      tally(i, +1);
    }
    order_.clear();
  }

  void tally(std::size_t i, int sign) {
    if (free_deg_[i] == 0) zeros_ += sign;
    if (free_deg_[i] == 1) {
      ones_ += sign;
      if (end_parity_ >= 0 && static_cast<int>(dg_.node(i).size() % 2) != end_parity_)
        wrong_ones_ += sign;
    }
  }

  void enter(std::size_t y) {
    tally(y, -1);
    visited_[y] = true;
  }

  // c stops being the current node; its unvisited neighbors lose one option.
  void leave(std::size_t c, int delta) {
    for (std::size_t nb : adj_[c]) {
      if (!visited_[nb]) tally(nb, -1);
      free_deg_[nb] += delta;
      if (!visited_[nb]) tally(nb, +1);
    }
  }

  bool dfs(std::size_t c) {
    if (++expansions_ > opts_.budget) throw BudgetHit{};
    if (expansions_ > slice_end_) throw SliceHit{};
    if (order_.size() == dg_.size()) return true;
    if (opts_.dead_end_pruning && (zeros_ > 0 || ones_ > 1 || wrong_ones_ > 0))
      return false;
    if (opts_.connectivity_pruning && !rest_connected(c)) return false;
    std::vector<std::size_t> next;
    for (std::size_t y : adj_[c])
      if (!visited_[y]) next.push_back(y);
    if (opts_.order == NeighborOrder::FewestExitsFirst)
      std::stable_sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
        return free_deg_[a] < free_deg_[b];
      });
    for (std::size_t y : next) {
      leave(c, -1);
      enter(y);
      order_.push_back(y);
      if (dfs(y)) return true;
      order_.pop_back();
      visited_[y] = false;
      tally(y, +1);
      leave(c, +1);
    }
    return false;
  }

  // Every unvisited node reachable from c through unvisited nodes.
  bool rest_connected(std::size_t c) {
    ++stamp_;
    std::size_t reached = 0;
    queue_.clear();
    queue_.push_back(c);
    mark_[c] = stamp_;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (std::size_t nb : adj_[queue_[head]]) {
        if (visited_[nb] || mark_[nb] == stamp_) continue;
        mark_[nb] = stamp_;
        ++reached;
        queue_.push_back(nb);
      }
    }
    return reached == dg_.size() - order_.size();
  }

  const DomGraph& dg_;
  SearchOptions opts_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::vector<std::size_t> queue_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<bool> visited_;
  std::vector<std::size_t> free_deg_;
  long zeros_ = 0;
  long ones_ = 0;
  // Unvisited nodes forced to be the endpoint but in the wrong parity class.
  long wrong_ones_ = 0;
  int end_parity_ = -1;
  std::vector<std::size_t> order_;
  std::uint64_t expansions_ = 0;
  std::uint64_t slice_end_ = 0;
};

}  // namespace

SearchResult brute_force_hamilton_path(const DomGraph& dg, const SearchOptions& opts) {
  return PathSearch(dg, opts).run();
}

ParityReport parity_check(const DomGraph& dg) {
  ParityReport r;
  r.count = dg.size();
  r.odd = r.count % 2 == 1;
  for (VertexSet s : dg.nodes()) (s.size() % 2 == 0 ? r.even_class : r.odd_class)++;
  return r;
}

ParityReport parity_check(const Graph& g, std::size_t budget) {
  return parity_check(build_dominating_graph(g, budget));
}

}  // namespace domham
