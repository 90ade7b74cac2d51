#include "domham/vertex_set.hpp"

namespace domham {

VertexSet VertexSet::of(std::initializer_list<int> members) {
  VertexSet s;
  for (int v : members) s = s.with(v);
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string to_binary_string(VertexSet s, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if (s.contains(i)) out[i] = '1';
  return out;
}

std::string to_set_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace domham
