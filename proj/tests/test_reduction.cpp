#include <doctest.h>

#include <random>

#include "domham/error.hpp"
#include "domham/reduction.hpp"
#include "support/generators.hpp"

using namespace domham;
using domham::testing::cycle_with_pendant_paths;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ConstructionFailed;
}

}  // namespace

TEST_CASE("find_reduction examples") {
  CHECK(find_reduction(Graph::path(3)) == Reduction::op1(0, 2, 1));
  CHECK(find_reduction(Graph::path(4)) == Reduction::op2(1, 2, 3));
  Reduction star = find_reduction(Graph::star(3));
  CHECK(star.kind == OpKind::OpI);
  CHECK(star.x() == 0);
  CHECK(star == Reduction::op1(1, 2, 0));
}

TEST_CASE("find_reduction errors") {
  CHECK(kind_of([] { find_reduction(Graph::cycle(4)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { find_reduction(Graph::path(2)); }) == ErrorKind::Underflow);
  CHECK(kind_of([] { find_reduction(Graph(3)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("apply_op1") {
  Graph p2 = apply_op1(Graph::path(3), Reduction::op1(0, 2, 1));
  CHECK(p2.active() == VertexSet::of({0, 1}));
  CHECK(p2.has_edge(0, 1));

  Graph star = apply_op1(Graph::star(3), Reduction::op1(1, 2, 0));
  CHECK(star.active() == VertexSet::of({0, 1, 3}));
  CHECK(star.edge_count() == 2);
  CHECK(star.is_tree());

  // Spider: two leaves 3, 4 on x = 2 at the end of a path 0-1-2.
  Graph spider = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  Graph s2 = apply_op1(spider, Reduction::op1(3, 4, 2));
  CHECK(s2 == spider.without(4));

  CHECK(kind_of([] { apply_op1(Graph::path(3), Reduction::op1(0, 1, 2)); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { apply_op1(Graph::path(4), Reduction::op2(1, 2, 3)); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("apply_op2") {
  Graph p2 = apply_op2(Graph::path(4), Reduction::op2(1, 2, 3));
  CHECK(p2.active() == VertexSet::of({0, 1}));
  Graph p3 = apply_op2(Graph::path(5), Reduction::op2(2, 3, 4));
  CHECK(p3.active() == VertexSet::of({0, 1, 2}));
  CHECK(p3.edge_count() == 2);

  Graph tri = cycle_with_pendant_paths(3, 1);  // pendant 0-3-4
  Graph back = apply_op2(tri, Reduction::op2(0, 3, 4));
  CHECK(back.active() == VertexSet::of({0, 1, 2}));
  CHECK(back.is_cycle());

  CHECK(kind_of([] { apply_op2(Graph::path(4), Reduction::op2(0, 1, 2)); }) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("reduce_tree_to_base") {
  auto p4 = reduce_tree_to_base(Graph::path(4));
  REQUIRE(p4.steps.size() == 1);
  CHECK(p4.steps[0].reduction.kind == OpKind::OpII);
  CHECK(p4.base().active() == VertexSet::of({0, 1}));

  auto p3 = reduce_tree_to_base(Graph::path(3));
  REQUIRE(p3.steps.size() == 1);
  CHECK(p3.steps[0].reduction.kind == OpKind::OpI);
  CHECK(p3.base().active_count() == 2);

  // OpII(4,5,6), OpII(2,3,4), OpI(0,2,1).
  auto p7 = reduce_tree_to_base(Graph::path(7));
  REQUIRE(p7.steps.size() == 3);
  CHECK(p7.steps[0].reduction == Reduction::op2(4, 5, 6));
  CHECK(p7.steps[1].reduction == Reduction::op2(2, 3, 4));
  CHECK(p7.steps[2].reduction == Reduction::op1(0, 2, 1));
  CHECK(p7.base().active() == VertexSet::of({0, 1}));

  CHECK(reduce_tree_to_base(Graph(1)).steps.empty());
  CHECK(reduce_tree_to_base(Graph::path(2)).steps.empty());
  CHECK(kind_of([] { reduce_tree_to_base(Graph::cycle(3)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("every labeled tree up to 8 vertices reduces validly") {
  for (int n = 3; n <= 8; ++n) {
    domham::testing::for_each_labeled_tree(n, [&](const Graph& t) {
      Reduction r = find_reduction(t);
      REQUIRE(is_valid_reduction(t, r));
      if (r.kind == OpKind::OpI) CHECK(r.u < r.v);
      ReductionTrace trace = reduce_tree_to_base(t);
      CHECK(trace.steps.size() <= static_cast<std::size_t>(n - 1));
      CHECK(trace.base().active_count() <= 2);
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const Graph& before = trace.before(i);
        const Graph& after = trace.steps[i].result;
        const int drop = trace.steps[i].reduction.kind == OpKind::OpI ? 1 : 2;
        CHECK(after.active_count() == before.active_count() - drop);
        CHECK(after == before.without(trace.steps[i].reduction.deleted()));
        CHECK(after.is_tree());
      }
    });
  }
}

TEST_CASE("random trees up to 12 vertices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Graph t = domham::testing::random_tree(9 + trial % 4, rng);
    CHECK(is_valid_reduction(t, find_reduction(t)));
    CHECK(reduce_tree_to_base(t).base().active_count() <= 2);
  }
}

TEST_CASE("reduce_unicyclic") {
  auto plain = reduce_unicyclic(Graph::cycle(5));
  CHECK(plain.steps.empty());
  CHECK(plain.base().is_cycle());

  auto one = reduce_unicyclic(cycle_with_pendant_paths(5, 1));
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].reduction == Reduction::op2(0, 5, 6));
  CHECK(one.base().active() == VertexSet::prefix(5));
  CHECK(one.base().is_cycle());

  auto three = reduce_unicyclic(cycle_with_pendant_paths(3, 3));
  CHECK(three.steps.size() == 3);
  for (const auto& s : three.steps) CHECK(s.reduction.kind == OpKind::OpII);
  CHECK(three.base().active() == VertexSet::of({0, 1, 2}));
  CHECK(three.base().is_cycle());
}

TEST_CASE("reduce_unicyclic rejects single pendant leaves") {
  // C_5 with two leaves 5, 6 on vertex 0: OpI drops one, the other is stuck.
  Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {0, 6}});
  CHECK(kind_of([&] { reduce_unicyclic(g); }) == ErrorKind::NotReducible);
  try {
    reduce_unicyclic(g);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("cycle vertex 0") != std::string::npos);
  }
  CHECK(kind_of([] { reduce_unicyclic(Graph::path(4)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("reduce_unicyclic handles deeper pendant trees") {
  // C_4 with a pendant spider at 0: 0-4, 4-5, 4-6 (two leaves on 4) then OpII.
  Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {4, 6}});
  auto trace = reduce_unicyclic(g);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].reduction == Reduction::op1(5, 6, 4));
  CHECK(trace.steps[1].reduction == Reduction::op2(0, 4, 5));
  CHECK(trace.base().active() == VertexSet::of({0, 1, 2, 3}));
}
