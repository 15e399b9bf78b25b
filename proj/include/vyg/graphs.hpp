#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vyg/btree.hpp"
#include "vyg/coloring.hpp"
#include "vyg/errors.hpp"

namespace vyg {

// The interval [a,b] with 1 <= a < b <= n; two intervals are adjacent when
// the head of one is the tail of the other (b = c or d = a).
struct IntervalVertex {
  int a = 0;
  int b = 0;
};

// Two paths leaving a common low point x, the left one ending at y, the
// right one at z.
struct Vee {
  Node x, y, z;
};

// A subtree with three leaves: `low` sits strictly below the branch point,
// and the two upper leaves hang over the branch point on opposite sides.
// `branch` is derived as the meet of the upper leaves and cached here.
struct Wye {
  Node low, branch, up_left, up_right;
};

// A vertex loaded from external data; carries only its name.
struct Opaque {
  std::string id;
};

using VertexLabel = std::variant<IntervalVertex, Vee, Wye, Opaque>;

Vee make_vee(const Node& x, const Node& y, const Node& z);
Wye make_wye(const Node& low, const Node& up_left, const Node& up_right);

// Canonical text key: "I:a,b", "V:x,y,z", "Y:low,ul,ur", or the opaque id.
// The root renders as the empty string.
std::string vertex_key(const VertexLabel& label);
// Same, but the root renders as "." so DOT labels stay readable.
std::string vertex_dot_label(const VertexLabel& label);
// Inverse of vertex_key; anything without a recognized prefix is opaque.
VertexLabel parse_vertex_key(const std::string& key);

// Adjacency rule used by every family here.  Interval pairs follow the
// head-to-tail rule.  A Vee/Wye pair is adjacent when an upper leaf of one
// equals the low point of the other, except that the end points of a Vee
// never attach to the low leaf of a Wye.  Mixed interval/tree kinds and
// opaque vertices are never adjacent.  Requires two distinct vertices.
bool adjacent(const VertexLabel& u, const VertexLabel& v);

// An immutable undirected graph.  Vertex ids are positions in the label
// array, which is sorted by canonical key, so ids are reproducible across
// runs.  Edge pairs are stored with u < v, sorted, without duplicates.
class Graph {
 public:
  Graph() = default;
  // `labels` must already be sorted by canonical key with unique keys.
  Graph(std::vector<VertexLabel> labels, std::vector<std::pair<int, int>> edges);

  int size() const { return int(labels_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const VertexLabel& label(int v) const { return labels_.at(std::size_t(v)); }
  const std::string& key(int v) const { return keys_.at(std::size_t(v)); }
  const std::vector<std::string>& keys() const { return keys_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::string> keys_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::int64_t> adj_offsets_;
  std::vector<int> adj_flat_;
};

// Assembles a graph from labels in any order: sorts by key, remaps the given
// edges accordingly, normalizes and dedupes them.
Graph assemble_graph(std::vector<VertexLabel> labels,
                     std::vector<std::pair<int, int>> edges_by_input_index);

// The graph of all intervals [a,b] with 1 <= a < b <= n under the
// head-to-tail rule.  Requires n >= 2.
Graph build_shift(int n);

// The graph of all Vees of the depth-n tree; adjacency joins a Vee whose end
// point is another Vee's low point.  Requires n >= 1.
Graph build_G(int n);

// Vees plus Wyes of the depth-n tree.  A Wye's upper leaves attach to low
// points of both kinds; end points of a Vee attach only to low points of
// Vees.  Requires n >= 1.
Graph build_H(int n);

// Proper coloring of build_shift(n): the color of [a,b] is one plus the
// index of the most significant bit where a-1 and b-1 differ.  Uses at most
// ceil(lg n) distinct colors.
Coloring shift_msb_coloring(const Graph& shift_graph);

bool is_triangle_free(const Graph& g);

}  // namespace vyg
