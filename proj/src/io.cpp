#include "domham/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "domham/error.hpp"

namespace domham::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    i = s.find_first_not_of(seps, i);
    if (i == std::string_view::npos) break;
    auto j = s.find_first_of(seps, i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_label(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size() && out >= 0;
}

Graph build(int n, const std::vector<std::pair<Edge, std::size_t>>& edges) {
  if (n > kMaxVertices)
    throw Error(ErrorKind::InvalidInput,
                "graph has " + std::to_string(n) + " vertices; at most " +
                    std::to_string(kMaxVertices) + " supported");
  Graph g(n);
  for (const auto& [e, line] : edges) {
    try {
      g.add_edge(e.first, e.second);
    } catch (const Error& err) {
      fail_at(line, err.what());
    }
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Edge, std::size_t>> edges;
  int n = 0;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line, " \t,");
    int u = 0, v = 0;
    if (fields.size() != 2 || !parse_label(fields[0], u) || !parse_label(fields[1], v))
      fail_at(i + 1, "expected 'u v' with non-negative integer labels, got '" +
                         std::string(line) + "'");
    if (u >= kMaxVertices || v >= kMaxVertices)
      fail_at(i + 1, "label exceeds " + std::to_string(kMaxVertices - 1));
    edges.push_back({{u, v}, i + 1});
    n = std::max({n, u + 1, v + 1});
  }
  return build(n, edges);
}

Graph parse_json_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    fail_at(line, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    fail_at(1, "JSON graph needs an integer field \"n\"");
  const int n = doc["n"].get<int>();
  if (n < 0) fail_at(1, "\"n\" must be non-negative");
  std::vector<std::pair<Edge, std::size_t>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail_at(1, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail_at(1, "each edge must be a pair of integers, got " + e.dump());
      const int u = e[0].get<int>(), v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n)
        fail_at(1, "edge " + e.dump() + " uses a label outside 0..n-1");
      edges.push_back({{u, v}, 1});
    }
  }
  return build(n, edges);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VertexSet parse_path_line(std::string_view line, int width, std::size_t lineno) {
  if (line.front() == '{') {
    if (line.back() != '}') fail_at(lineno, "unterminated set '" + std::string(line) + "'");
    VertexSet s;
    for (auto tok : split_fields(line.substr(1, line.size() - 2), " ,")) {
      int v = 0;
      if (!parse_label(tok, v) || v >= width)
        fail_at(lineno, "bad vertex '" + std::string(tok) + "'");
      s = s.with(v);
    }
    return s;
  }
  if (static_cast<int>(line.size()) != width)
    fail_at(lineno, "expected a binary string of length " + std::to_string(width));
  VertexSet s;
  for (int i = 0; i < width; ++i) {
    if (line[i] == '1')
      s = s.with(i);
    else if (line[i] != '0')
      fail_at(lineno, "invalid character '" + std::string(1, line[i]) + "'");
  }
  return s;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' ? parse_json_graph(text) : parse_edge_list(text);
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

HamPath parse_path(std::string_view text, int width) {
  HamPath p;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    p.push_back(parse_path_line(line, width, i + 1));
  }
  return p;
}

HamPath read_path_file(const std::string& path, int width) {
  return parse_path(slurp(path), width);
}

std::string format_path_binary(const HamPath& p, int width) {
  std::string out;
  out.reserve(p.size() * (static_cast<std::size_t>(width) + 1));
  for (VertexSet s : p) {
    out += to_binary_string(s, width);
    out += '\n';
  }
  return out;
}

std::string format_path_sets(const HamPath& p) {
  std::string out;
  for (VertexSet s : p) {
    out += to_set_string(s);
    out += '\n';
  }
  return out;
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.label_count()}, {"edges", edges}}.dump();
}

std::string domgraph_to_dot(const DomGraph& dg) {
  const int width = dg.host().label_count();
  std::string out = "graph D {\n";
  for (VertexSet s : dg.nodes()) out += "  \"" + to_binary_string(s, width) + "\";\n";
  for (auto [i, j] : dg.edges())
    out += "  \"" + to_binary_string(dg.node(i), width) + "\" -- \"" +
           to_binary_string(dg.node(j), width) + "\";\n";
  out += "}\n";
  return out;
}

std::string domgraph_to_json(const DomGraph& dg) {
  const int width = dg.host().label_count();
  json nodes = json::array();
  for (VertexSet s : dg.nodes()) nodes.push_back(to_binary_string(s, width));
  json edges = json::array();
  for (auto [i, j] : dg.edges()) edges.push_back({i, j});
  json doc{{"n", width}, {"nodes", nodes}, {"edges", edges}};
  return doc.dump(2) + "\n";
}

std::string trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    const Reduction& r = step.reduction;
    json s{{"kind", to_string(r.kind)}, {"u", r.u}, {"v", r.v}};
    s[r.kind == OpKind::OpI ? "x" : "w"] = r.third;
    s["remaining"] = step.result.active().members();
    steps.push_back(std::move(s));
  }
  json doc{{"n", trace.start.label_count()},
           {"start", trace.start.active().members()},
           {"steps", steps},
           {"base", trace.base().active().members()}};
  return doc.dump(2) + "\n";
}

}  // namespace domham::io
