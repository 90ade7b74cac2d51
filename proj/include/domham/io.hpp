#pragma once

#include <string>
#include <string_view>

#include "domham/dominating.hpp"
#include "domham/reduction.hpp"

namespace domham::io {

/// Reads either an edge list ("u v" per line, '#' comments, blank lines
/// skipped, n = largest label + 1) or a JSON document {"n": int,
/// "edges": [[u, v], ...]}. The format is chosen by the first
/// non-blank character. Errors carry the offending line number.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// One set per line, either a binary string x_0..x_{n-1} of length `width`
/// or a brace list like "{0,3}". '#' comments and blank lines are skipped.
HamPath parse_path(std::string_view text, int width);
HamPath read_path_file(const std::string& path, int width);

std::string format_path_binary(const HamPath& p, int width);
std::string format_path_sets(const HamPath& p);

std::string graph_to_json(const Graph& g);
/// Node names are binary strings.
std::string domgraph_to_dot(const DomGraph& dg);
std::string domgraph_to_json(const DomGraph& dg);
std::string trace_to_json(const ReductionTrace& trace);

}  // namespace domham::io
