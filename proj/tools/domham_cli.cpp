// domham: dominating-set enumeration, dominating graphs, and Hamilton paths
// through them.
//
// Exit status: 0 success/pass, 1 verification failure, 2 nonexistence,
// 3 unknown/budget, 64 usage, 65 bad input.

#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "domham/composer.hpp"
#include "domham/cycle_hamilton.hpp"
#include "domham/dominating.hpp"
#include "domham/error.hpp"
#include "domham/io.hpp"
#include "domham/oracle.hpp"
#include "domham/reduction.hpp"

namespace {

using namespace domham;

enum Status : int {
  kOk = 0,
  kVerifyFailed = 1,
  kNonexistent = 2,
  kUnknown = 3,
  kUsage = 64,
  kBadInput = 65,
};

void print_path(const HamPath& p, int width, bool as_sets) {
  std::cout << (as_sets ? io::format_path_sets(p) : io::format_path_binary(p, width));
}

int cmd_enum(const std::string& graph_file, bool as_sets) {
  Graph g = io::read_graph_file(graph_file);
  print_path(enumerate_dominating_sets(g), g.label_count(), as_sets);
  return kOk;
}

int cmd_domgraph(const std::string& graph_file, bool as_json) {
  Graph g = io::read_graph_file(graph_file);
  DomGraph dg = build_dominating_graph(g);
  std::cout << (as_json ? io::domgraph_to_json(dg) : io::domgraph_to_dot(dg));
  return kOk;
}

int cmd_path(const std::string& graph_file, const std::string& method, bool as_sets,
             const ComposeOptions& opts) {
  Graph g = io::read_graph_file(graph_file);
  Outcome out = hamilton_path_with(g, parse_method(method), opts);
  switch (out.kind) {
    case OutcomeKind::Path:
      print_path(out.path, g.label_count(), as_sets);
      return kOk;
    case OutcomeKind::NonExistence:
      std::cout << "NONEXISTENT\n";
      if (!out.detail.empty()) std::cerr << out.detail << "\n";
      return kNonexistent;
    case OutcomeKind::Unknown:
      std::cout << "UNKNOWN\n";
      if (!out.detail.empty()) std::cerr << out.detail << "\n";
      return kUnknown;
  }
  return kUnknown;
}

int cmd_verify(const std::string& graph_file, const std::string& path_file) {
  Graph g = io::read_graph_file(graph_file);
  HamPath p = io::read_path_file(path_file, g.label_count());
  VerifyReport r = verify_hamilton_path(g, p);
  auto line = [](const char* name, bool ok, const std::optional<std::size_t>& at) {
    std::cout << name << ": " << (ok ? "ok" : "FAIL");
    if (at) std::cout << " at index " << *at;
    std::cout << "\n";
  };
  line("dominating", r.all_dominating, r.first_not_dominating);
  line("distinct", r.all_distinct, r.first_repeat);
  line("unit-steps", r.unit_steps, r.first_bad_step);
  std::cout << "complete: " << (r.complete ? "ok" : "FAIL") << " (" << r.actual_count
            << " of " << r.expected_count << ")\n";
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
  return r.pass() ? kOk : kVerifyFailed;
}

int cmd_parity(const std::string& graph_file) {
  Graph g = io::read_graph_file(graph_file);
  ParityReport r = parity_check(g);
  std::cout << "count: " << r.count << "\n"
            << "odd: " << (r.odd ? "yes" : "no") << "\n"
            << "even-class: " << r.even_class << "\n"
            << "odd-class: " << r.odd_class << "\n"
            << "classes-unequal: " << (r.classes_unequal() ? "yes" : "no") << "\n";
  return r.odd && r.classes_unequal() ? kOk : kVerifyFailed;
}

int cmd_reduce(const std::string& graph_file) {
  Graph g = io::read_graph_file(graph_file);
  if (g.is_tree())
    std::cout << io::trace_to_json(reduce_tree_to_base(g));
  else if (g.is_unicyclic())
    std::cout << io::trace_to_json(reduce_unicyclic(g));
  else
    throw Error(ErrorKind::InvalidInput, "reduce needs a tree or a unicyclic graph");
  return kOk;
}

int cmd_cycle(int n, bool as_sets, bool certify, const ComposeOptions& opts) {
  auto result = hamilton_path_cycle(n);
  if (auto* p = std::get_if<HamPath>(&result)) {
    print_path(*p, n, as_sets);
    return kOk;
  }
  std::cout << "NONEXISTENT\n";
  if (certify) {
    SearchOptions so;
    so.budget = opts.search_budget;
    SearchResult r = brute_force_hamilton_path(build_dominating_graph(Graph::cycle(n)), so);
    std::cerr << "certificate: " << to_string(r.status) << " after " << r.expansions
              << " expansions\n";
    if (r.status == SearchStatus::BudgetExceeded) return kUnknown;
    if (r.status == SearchStatus::Found) return kVerifyFailed;
  }
  return kNonexistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton paths in dominating graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t budget = 100'000'000;
  std::int64_t seed = 0;
  app.add_option("--budget", budget, "Oracle search expansion limit")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Reserved; ignored");

  std::string graph_file, path_file, method = "auto";
  bool as_sets = false, as_json = false, as_dot = false, certify = false;
  int cycle_n = 0;

  auto* enum_cmd = app.add_subcommand("enum", "List all dominating sets");
  enum_cmd->add_option("graph", graph_file)->required();
  enum_cmd->add_flag("--sets", as_sets, "Print brace-delimited vertex sets");

  auto* dom_cmd = app.add_subcommand("domgraph", "Export the dominating graph");
  dom_cmd->add_option("graph", graph_file)->required();
  auto* json_flag = dom_cmd->add_flag("--json", as_json, "JSON document");
  dom_cmd->add_flag("--dot", as_dot, "DOT (default)")->excludes(json_flag);

  auto* path_cmd = app.add_subcommand("path", "Construct a Hamilton path of D(G)");
  path_cmd->add_option("graph", graph_file)->required();
  path_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "tree", "cycle", "unicyclic", "oracle"}))
      ->capture_default_str();
  path_cmd->add_flag("--sets", as_sets, "Print brace-delimited vertex sets");

  auto* verify_cmd = app.add_subcommand("verify", "Check a path file against D(G)");
  verify_cmd->add_option("graph", graph_file)->required();
  verify_cmd->add_option("pathfile", path_file)->required();

  auto* parity_cmd = app.add_subcommand("parity", "Count dominating sets by parity");
  parity_cmd->add_option("graph", graph_file)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduction trace");
  reduce_cmd->add_option("graph", graph_file)->required();

  auto* cycle_cmd = app.add_subcommand("cycle", "Hamilton path of D(C_n)");
  cycle_cmd->add_option("n", cycle_n)->required();
  cycle_cmd->add_flag("--sets", as_sets, "Print brace-delimited vertex sets");
  cycle_cmd->add_flag("--certify", certify, "Run the exhaustive search when n = 0 mod 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (seed_opt->count() > 0)
    std::cerr << "warning: --seed has no effect; nothing here is randomized\n";

  ComposeOptions opts;
  opts.search_budget = budget;

  try {
    if (*enum_cmd) return cmd_enum(graph_file, as_sets);
    if (*dom_cmd) return cmd_domgraph(graph_file, as_json);
    if (*path_cmd) return cmd_path(graph_file, method, as_sets, opts);
    if (*verify_cmd) return cmd_verify(graph_file, path_file);
    if (*parity_cmd) return cmd_parity(graph_file);
    if (*reduce_cmd) return cmd_reduce(graph_file);
    if (*cycle_cmd) return cmd_cycle(cycle_n, as_sets, certify, opts);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit: return kUnknown;
      case ErrorKind::ConstructionFailed: return kVerifyFailed;
      default: return kBadInput;
    }
  }
  return kUsage;
}
