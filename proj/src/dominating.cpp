#include "domham/dominating.hpp"

#include <algorithm>
#include <string>

#include "domham/error.hpp"

namespace domham {

bool is_dominating(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.active()))
    throw Error(ErrorKind::InvalidInput,
                "set " + to_set_string(s) + " contains inactive vertices");
  VertexSet covered = s;
  s.for_each([&](int v) { covered |= g.neighbors(v); });
  return g.active().subset_of(covered);
}

namespace {

// Branch over candidates from the highest label down, excluding before
// including, which emits sets in ascending numeric order. A target is checked
// as soon as the last candidate of its closed neighborhood is decided.
class SubsetEnumerator {
 public:
  SubsetEnumerator(const Graph& g, VertexSet candidates, VertexSet targets,
                   std::size_t budget)
      : g_(g), budget_(budget) {
    for (int v = kMaxVertices - 1; v >= 0; --v)
      if (candidates.contains(v)) order_.push_back(v);
    closing_.assign(order_.size(), VertexSet{});
    feasible_ = true;
    targets.for_each([&](int t) {
      VertexSet reach = g.closed_neighborhood(t) & candidates;
      if (reach.empty()) {
        feasible_ = false;
        return;
      }
      auto pos = std::find(order_.begin(), order_.end(), reach.min()) - order_.begin();
      closing_[pos] = closing_[pos].with(t);
    });
  }

  std::vector<VertexSet> run() {
    if (feasible_) {
      if (order_.empty())
        emit(VertexSet{});
      else
        descend(0, VertexSet{}, VertexSet{});
    }
    return std::move(out_);
  }

 private:
  void descend(std::size_t k, VertexSet chosen, VertexSet covered) {
    int v = order_[k];
    for (bool take : {false, true}) {
      VertexSet c = take ? chosen.with(v) : chosen;
      VertexSet cov = take ? covered | g_.closed_neighborhood(v) : covered;
      if (!closing_[k].subset_of(cov)) continue;
      if (k + 1 == order_.size())
        emit(c);
      else
        descend(k + 1, c, cov);
    }
  }

  void emit(VertexSet s) {
    if (out_.size() >= budget_)
      throw Error(ErrorKind::ResourceLimit,
                  "dominating-set enumeration exceeded budget of " +
                      std::to_string(budget_) + " sets");
    out_.push_back(s);
  }

  const Graph& g_;
  std::size_t budget_;
  std::vector<int> order_;
  std::vector<VertexSet> closing_;
  bool feasible_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> dominating_subsets(const Graph& g, VertexSet candidates,
                                          VertexSet targets, std::size_t budget) {
  return SubsetEnumerator(g, candidates & g.active(), targets & g.active(), budget).run();
}

std::vector<VertexSet> enumerate_dominating_sets(const Graph& g, std::size_t budget) {
  return dominating_subsets(g, g.active(), g.active(), budget);
}

DomGraph::DomGraph(Graph host, std::vector<VertexSet> nodes)
    : host_(std::move(host)), nodes_(std::move(nodes)) {
  if (!std::is_sorted(nodes_.begin(), nodes_.end()))
    throw Error(ErrorKind::InvalidInput, "DomGraph nodes must be sorted ascending");
}

std::optional<std::size_t> DomGraph::index_of(VertexSet s) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
  if (it == nodes_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool DomGraph::adjacent(std::size_t i, std::size_t j) const {
  return hamming(nodes_[i], nodes_[j]) == 1;
}

std::vector<std::size_t> DomGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  host_.active().for_each([&](int v) {
    if (auto j = index_of(nodes_[i].toggled(v))) out.push_back(*j);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> DomGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j : neighbors(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

DomGraph build_dominating_graph(const Graph& g, std::size_t budget) {
  return DomGraph(g, enumerate_dominating_sets(g, budget));
}

}  // namespace domham
