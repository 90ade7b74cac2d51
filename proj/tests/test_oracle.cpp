#include <doctest.h>

#include <chrono>

#include "domham/oracle.hpp"
#include "domham/tree_hamilton.hpp"
#include "support/generators.hpp"

using namespace domham;

TEST_CASE("verify_hamilton_path examples") {
  const Graph p2 = Graph::path(2);
  VerifyReport ok = verify_hamilton_path(
      p2, {VertexSet::of({0}), VertexSet::of({0, 1}), VertexSet::of({1})});
  CHECK(ok.pass());
  CHECK(ok.expected_count == 3);

  VerifyReport jump = verify_hamilton_path(
      p2, {VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({0, 1})});
  CHECK_FALSE(jump.pass());
  CHECK_FALSE(jump.unit_steps);
  CHECK(jump.first_bad_step == 0u);
  CHECK(jump.all_dominating);
  CHECK(jump.all_distinct);
  CHECK(jump.complete);

  CHECK(verify_hamilton_path(Graph::path(3), hamilton_path_tree(Graph::path(3))).pass());
}

TEST_CASE("verify reports each failure independently") {
  const Graph p3 = Graph::path(3);
  VerifyReport r = verify_hamilton_path(
      p3, {VertexSet::of({0}), VertexSet::of({0, 1}), VertexSet::of({0, 1}), VertexSet::of({0, 7})});
  CHECK_FALSE(r.all_dominating);
  CHECK(r.first_not_dominating == 0u);
  CHECK_FALSE(r.all_distinct);
  CHECK(r.first_repeat == 2u);
  CHECK_FALSE(r.unit_steps);
  CHECK_FALSE(r.complete);
  CHECK(r.expected_count == 5);
}

TEST_CASE("brute force examples") {
  auto start = std::chrono::steady_clock::now();
  SearchResult c4 = brute_force_hamilton_path(build_dominating_graph(Graph::cycle(4)));
  CHECK(c4.status == SearchStatus::NotExists);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));

  SearchOptions plain;
  plain.parity_pruning = plain.dead_end_pruning = plain.connectivity_pruning = false;
  SearchResult c4_plain = brute_force_hamilton_path(build_dominating_graph(Graph::cycle(4)), plain);
  CHECK(c4_plain.status == SearchStatus::NotExists);
  CHECK(c4_plain.expansions > 11);

  DomGraph c8 = build_dominating_graph(Graph::cycle(8));
  ParityReport c8_par = parity_check(c8);
  CHECK(c8_par.even_class == 67);
  CHECK(c8_par.odd_class == 64);
  CHECK(brute_force_hamilton_path(c8).status == SearchStatus::NotExists);

  SearchResult p2 = brute_force_hamilton_path(build_dominating_graph(Graph::path(2)));
  REQUIRE(p2.status == SearchStatus::Found);
  CHECK(p2.path.size() == 3);

  SearchResult c5 = brute_force_hamilton_path(build_dominating_graph(Graph::cycle(5)));
  REQUIRE(c5.status == SearchStatus::Found);
  CHECK(verify_hamilton_path(Graph::cycle(5), c5.path).pass());

  SearchOptions tiny;
  tiny.budget = 3;
  CHECK(brute_force_hamilton_path(build_dominating_graph(Graph::cycle(5)), tiny).status ==
        SearchStatus::BudgetExceeded);
}

TEST_CASE("pruned and unpruned search agree on every graph with n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    domham::testing::for_each_graph(n, [&](const Graph& g) {
      DomGraph dg = build_dominating_graph(g);
      SearchOptions plain;
      plain.parity_pruning = false;
      plain.dead_end_pruning = false;
      plain.connectivity_pruning = false;
      plain.order = NeighborOrder::Ascending;
      SearchResult a = brute_force_hamilton_path(dg);
      SearchResult b = brute_force_hamilton_path(dg, plain);
      REQUIRE(a.status != SearchStatus::BudgetExceeded);
      REQUIRE(b.status != SearchStatus::BudgetExceeded);
      CHECK(a.status == b.status);
      if (a.status == SearchStatus::Found) CHECK(verify_hamilton_path(g, a.path).pass());
      CHECK(a.expansions <= b.expansions);
    });
  }
}

TEST_CASE("brute force finds paths for every tree with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    domham::testing::for_each_labeled_tree(n, [&](const Graph& t) {
      SearchResult r = brute_force_hamilton_path(build_dominating_graph(t));
      REQUIRE(r.status == SearchStatus::Found);
      CHECK(verify_hamilton_path(t, r.path).pass());
    });
  }
}

TEST_CASE("parity_check examples") {
  ParityReport p4 = parity_check(Graph::path(4));
  CHECK(p4.count == 9);
  CHECK(p4.odd);
  CHECK(p4.classes_unequal());
  CHECK(p4.even_class + p4.odd_class == 9);

  ParityReport c5 = parity_check(Graph::cycle(5));
  CHECK(c5.count == 21);
  CHECK(c5.odd);

  ParityReport k3 = parity_check(Graph::complete(3));
  CHECK(k3.count == 7);
  CHECK(k3.odd);
  CHECK(k3.odd_class == 4);
  CHECK(k3.even_class == 3);
}

TEST_CASE("Brouwer parity on every graph with n <= 5, connected or not") {
  for (int n = 1; n <= 5; ++n) {
    domham::testing::for_each_graph(n, [&](const Graph& g) {
      CHECK(count_dominating_sets_naive(g) % 2 == 1);
    });
  }
}
