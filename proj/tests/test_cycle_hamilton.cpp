#include <doctest.h>

#include <variant>

#include "domham/cycle_hamilton.hpp"
#include "domham/dominating.hpp"
#include "domham/error.hpp"
#include "domham/oracle.hpp"

using namespace domham;

namespace {

std::vector<std::string> as_strings(const std::vector<VertexSet>& seq, int n) {
  std::vector<std::string> out;
  for (VertexSet s : seq) out.push_back(to_binary_string(s, n));
  return out;
}

// Three cyclically consecutive ones in a string of width n.
bool has_three_ones(VertexSet s, int n) {
  for (int i = 0; i < n; ++i)
    if (s.contains(i) && s.contains((i + 1) % n) && s.contains((i + 2) % n)) return true;
  return false;
}

}  // namespace

TEST_CASE("brgc small widths") {
  CHECK(as_strings(brgc(1), 1) == std::vector<std::string>{"0", "1"});
  CHECK(as_strings(brgc(2), 2) == std::vector<std::string>{"00", "01", "11", "10"});
  auto five = as_strings(brgc(5), 5);
  CHECK(std::vector<std::string>(five.begin(), five.begin() + 8) ==
        std::vector<std::string>{"00000", "00001", "00011", "00010", "00110", "00111",
                                 "00101", "00100"});
  CHECK(five.back() == "10000");
  CHECK_THROWS_AS(brgc(0), Error);
  CHECK_THROWS_AS(brgc(25), Error);
}

TEST_CASE("brgc is a Gray code") {
  for (int n = 1; n <= 12; ++n) {
    auto seq = brgc(n);
    CHECK(seq.size() == (std::size_t{1} << n));
    CHECK_FALSE(first_gray_violation(seq).has_value());
    CHECK(seq.front() == VertexSet{});
  }
}

TEST_CASE("filter_circular examples") {
  auto five = filter_circular(brgc(5), 5);
  const std::vector<std::string> figure{
      "00111", "00101", "01101", "01111", "01110", "01010", "01011",
      "01001", "11001", "11011", "11010", "11110", "11111", "11101",
      "11100", "10100", "10101", "10111", "10110", "10010", "10011"};
  CHECK(as_strings(five, 5) == figure);
  CHECK(filter_circular(brgc(3), 3).size() == 7);
  auto four = filter_circular(brgc(4), 4);
  CHECK(four.size() == 11);
  for (VertexSet s : four) CHECK(s.size() >= 2);
  CHECK(filtered_brgc(5) == five);
}

TEST_CASE("filter agrees with dominating sets of C_n and complements of Lucas strings") {
  for (int n = 3; n <= 14; ++n) {
    auto filtered = filtered_brgc(n);
    auto sorted = filtered;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == enumerate_dominating_sets(Graph::cycle(n)));
    const VertexSet full = VertexSet::prefix(n);
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      VertexSet s(m);
      CHECK(no_circular_gap(s, n) == !has_three_ones(full - s, n));
    }
  }
}

TEST_CASE("hamilton_path_cycle") {
  auto five = hamilton_path_cycle(5);
  REQUIRE(std::holds_alternative<HamPath>(five));
  const HamPath& p = std::get<HamPath>(five);
  CHECK(p.size() == 21);
  CHECK(p.front() == VertexSet::of({2, 3, 4}));
  CHECK(p.back() == VertexSet::of({0, 3, 4}));

  CHECK(std::holds_alternative<NonExistence>(hamilton_path_cycle(4)));
  CHECK(std::holds_alternative<NonExistence>(hamilton_path_cycle(8)));

  auto six = hamilton_path_cycle(6);
  REQUIRE(std::holds_alternative<HamPath>(six));
  CHECK(std::get<HamPath>(six).size() == 39);
  CHECK(verify_hamilton_path(Graph::cycle(6), std::get<HamPath>(six)).pass());
  CHECK_THROWS_AS(hamilton_path_cycle(2), Error);
}

TEST_CASE("counts of D(C_n) follow the tribonacci-style recurrence") {
  const std::vector<std::size_t> expected{7, 11, 21, 39, 71, 131};
  for (int n = 3; n <= 8; ++n) CHECK(filtered_brgc(n).size() == expected[n - 3]);
  for (std::size_t i = 3; i < expected.size(); ++i)
    CHECK(expected[i] == expected[i - 1] + expected[i - 2] + expected[i - 3]);
}

TEST_CASE("Gray property fails for n divisible by 4") {
  for (int n : {4, 8, 12}) CHECK(first_gray_violation(filtered_brgc(n)).has_value());
}

TEST_CASE("cycle graphs with arbitrary labels") {
  // Cycle 3-0-5-1-4 on labels {0,1,3,4,5}; label 2 inactive.
  Graph g(6);
  for (auto [a, b] : std::vector<Edge>{{3, 0}, {0, 5}, {5, 1}, {1, 4}, {4, 3}}) g.add_edge(a, b);
  g = g.without(2);
  auto r = hamilton_path_cycle_graph(g);
  REQUIRE(std::holds_alternative<HamPath>(r));
  CHECK(verify_hamilton_path(g, std::get<HamPath>(r)).pass());
  CHECK_THROWS_AS(hamilton_path_cycle_graph(Graph::path(4)), Error);
}
