#pragma once

#include <map>

namespace vyg {

// A (possibly partial) assignment of colors to vertex ids.  Colors are
// positive integers; iteration order is by vertex id, so serialized output
// is stable.
struct Coloring {
  std::map<int, int> by_vertex;

  bool has(int v) const { return by_vertex.count(v) != 0; }
  int color(int v) const { return by_vertex.at(v); }
  void set(int v, int c) { by_vertex[v] = c; }
  std::size_t size() const { return by_vertex.size(); }
};

}  // namespace vyg
