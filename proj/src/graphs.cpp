#include "vyg/graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <unordered_map>

namespace vyg {

namespace {

std::string node_text(const Node& x, bool dot) {
  if (x.is_root()) return dot ? "." : "";
  return x.to_string();
}

std::string key_impl(const VertexLabel& label, bool dot) {
  if (const auto* iv = std::get_if<IntervalVertex>(&label)) {
    return "I:" + std::to_string(iv->a) + "," + std::to_string(iv->b);
  }
  if (const auto* v = std::get_if<Vee>(&label)) {
    return "V:" + node_text(v->x, dot) + "," + node_text(v->y, dot) + "," +
           node_text(v->z, dot);
  }
  if (const auto* w = std::get_if<Wye>(&label)) {
    return "Y:" + node_text(w->low, dot) + "," + node_text(w->up_left, dot) +
           "," + node_text(w->up_right, dot);
  }
  return std::get<Opaque>(label).id;
}

std::vector<std::string> split3(const std::string& body, const std::string& key) {
  auto c1 = body.find(',');
  auto c2 = body.find(',', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      body.find(',', c2 + 1) != std::string::npos) {
    throw Error("vertex key needs exactly three fields: \"" + key + "\"");
  }
  return {body.substr(0, c1), body.substr(c1 + 1, c2 - c1 - 1),
          body.substr(c2 + 1)};
}

int parse_int_strict(const std::string& s, const std::string& key) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("bad integer \"" + s + "\" in vertex key \"" + key + "\"");
  }
  return value;
}

}  // namespace

Vee make_vee(const Node& x, const Node& y, const Node& z) {
  if (!strictly_below(x, y) || side_above(x, y) != Side::Left) {
    throw Error("Vee end point \"" + y.to_string() +
                "\" is not in the left tree above \"" + x.to_string() + "\"");
  }
  if (!strictly_below(x, z) || side_above(x, z) != Side::Right) {
    throw Error("Vee end point \"" + z.to_string() +
                "\" is not in the right tree above \"" + x.to_string() + "\"");
  }
  return Vee{x, y, z};
}

Wye make_wye(const Node& low, const Node& up_left, const Node& up_right) {
  Node b = meet(up_left, up_right);
  if (!strictly_below(b, up_left) || side_above(b, up_left) != Side::Left) {
    throw Error("Wye upper leaf \"" + up_left.to_string() +
                "\" is not in the left tree above the branch point");
  }
  if (!strictly_below(b, up_right) || side_above(b, up_right) != Side::Right) {
    throw Error("Wye upper leaf \"" + up_right.to_string() +
                "\" is not in the right tree above the branch point");
  }
  if (!strictly_below(low, b)) {
    throw Error("Wye low leaf \"" + low.to_string() +
                "\" is not strictly below the branch point \"" +
                b.to_string() + "\"");
  }
  return Wye{low, b, up_left, up_right};
}

std::string vertex_key(const VertexLabel& label) { return key_impl(label, false); }

std::string vertex_dot_label(const VertexLabel& label) {
  return key_impl(label, true);
}

VertexLabel parse_vertex_key(const std::string& key) {
  if (key.rfind("I:", 0) == 0) {
    std::string body = key.substr(2);
    auto comma = body.find(',');
    if (comma == std::string::npos ||
        body.find(',', comma + 1) != std::string::npos) {
      throw Error("interval key needs two fields: \"" + key + "\"");
    }
    int a = parse_int_strict(body.substr(0, comma), key);
    int b = parse_int_strict(body.substr(comma + 1), key);
    if (a >= b) throw Error("interval key must have a < b: \"" + key + "\"");
    return IntervalVertex{a, b};
  }
  if (key.rfind("V:", 0) == 0) {
    auto parts = split3(key.substr(2), key);
    return make_vee(Node::parse(parts[0]), Node::parse(parts[1]),
                    Node::parse(parts[2]));
  }
  if (key.rfind("Y:", 0) == 0) {
    auto parts = split3(key.substr(2), key);
    return make_wye(Node::parse(parts[0]), Node::parse(parts[1]),
                    Node::parse(parts[2]));
  }
  return Opaque{key};
}

namespace {

struct Tips {
  Node first, second;
  bool is_vee;
};

Tips tips_of(const VertexLabel& label) {
  if (const auto* v = std::get_if<Vee>(&label)) return {v->y, v->z, true};
  const auto& w = std::get<Wye>(label);
  return {w.up_left, w.up_right, false};
}

Node anchor_of(const VertexLabel& label) {
  if (const auto* v = std::get_if<Vee>(&label)) return v->x;
  return std::get<Wye>(label).low;
}

bool tree_kind(const VertexLabel& label) {
  return std::holds_alternative<Vee>(label) || std::holds_alternative<Wye>(label);
}

// Directed attachment: an upper leaf of u equals the low point of v, unless
// u is a Vee and v is a Wye.
bool attaches(const VertexLabel& u, const VertexLabel& v) {
  if (std::holds_alternative<Vee>(u) && std::holds_alternative<Wye>(v)) {
    return false;
  }
  Tips t = tips_of(u);
  Node a = anchor_of(v);
  return t.first == a || t.second == a;
}

}  // namespace

bool adjacent(const VertexLabel& u, const VertexLabel& v) {
  if (const auto* iu = std::get_if<IntervalVertex>(&u)) {
    const auto* iv = std::get_if<IntervalVertex>(&v);
    if (!iv) return false;
    if (iu->a == iv->a && iu->b == iv->b) {
      throw Error("adjacency requires two distinct vertices");
    }
    return iu->b == iv->a || iv->b == iu->a;
  }
  if (!tree_kind(u) || !tree_kind(v)) return false;
  if (vertex_key(u) == vertex_key(v)) {
    throw Error("adjacency requires two distinct vertices");
  }
  return attaches(u, v) || attaches(v, u);
}

Graph::Graph(std::vector<VertexLabel> labels,
             std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  keys_.reserve(labels_.size());
  for (const auto& l : labels_) keys_.push_back(vertex_key(l));
  for (std::size_t i = 1; i < keys_.size(); ++i) {
    if (!(keys_[i - 1] < keys_[i])) {
      throw Error("vertex keys must be strictly increasing; saw \"" +
                  keys_[i - 1] + "\" before \"" + keys_[i] + "\"");
    }
  }
  int n = size();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("edge endpoint out of range");
    }
    if (u >= v) throw Error("edges must be stored with u < v");
    if (i > 0 && !(edges_[i - 1] < edges_[i])) {
      throw Error("edges must be sorted and unique");
    }
  }

  adj_offsets_.assign(std::size_t(n) + 1, 0);
  for (auto [u, v] : edges_) {
    ++adj_offsets_[std::size_t(u) + 1];
    ++adj_offsets_[std::size_t(v) + 1];
  }
  std::partial_sum(adj_offsets_.begin(), adj_offsets_.end(),
                   adj_offsets_.begin());
  adj_flat_.resize(std::size_t(adj_offsets_[std::size_t(n)]));
  std::vector<std::int64_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_flat_[std::size_t(cursor[std::size_t(u)]++)] = v;
    adj_flat_[std::size_t(cursor[std::size_t(v)]++)] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto begin = adj_flat_.begin() + adj_offsets_[std::size_t(v)];
    auto end = adj_flat_.begin() + adj_offsets_[std::size_t(v) + 1];
    std::sort(begin, end);
  }
}

std::span<const int> Graph::neighbors(int v) const {
  auto lo = std::size_t(adj_offsets_.at(std::size_t(v)));
  auto hi = std::size_t(adj_offsets_.at(std::size_t(v) + 1));
  return std::span<const int>(adj_flat_.data() + lo, hi - lo);
}

int Graph::degree(int v) const { return int(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph assemble_graph(std::vector<VertexLabel> labels,
                     std::vector<std::pair<int, int>> edges_by_input_index) {
  std::vector<int> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys;
  keys.reserve(labels.size());
  for (const auto& l : labels) keys.push_back(vertex_key(l));
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[std::size_t(a)] < keys[std::size_t(b)]; });
  std::vector<int> rank(labels.size());
  std::vector<VertexLabel> sorted;
  sorted.reserve(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[std::size_t(order[i])] = int(i);
    sorted.push_back(std::move(labels[std::size_t(order[i])]));
  }
  for (auto& [u, v] : edges_by_input_index) {
    u = rank.at(std::size_t(u));
    v = rank.at(std::size_t(v));
    if (u == v) throw Error("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_by_input_index.begin(), edges_by_input_index.end());
  edges_by_input_index.erase(
      std::unique(edges_by_input_index.begin(), edges_by_input_index.end()),
      edges_by_input_index.end());
  return Graph(std::move(sorted), std::move(edges_by_input_index));
}

Graph build_shift(int n) {
  if (n < 2) throw Error("interval family needs n >= 2");
  std::vector<VertexLabel> labels;
  labels.reserve(std::size_t(n) * std::size_t(n - 1) / 2);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      labels.push_back(IntervalVertex{a, b});
    }
  }
  std::sort(labels.begin(), labels.end(),
            [](const VertexLabel& u, const VertexLabel& v) {
              return vertex_key(u) < vertex_key(v);
            });
  // heads[a] lists ids of intervals whose left end is a.
  std::vector<std::vector<int>> heads(std::size_t(n) + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    heads[std::size_t(std::get<IntervalVertex>(labels[i]).a)].push_back(int(i));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int b = std::get<IntervalVertex>(labels[i]).b;
    for (int j : heads[std::size_t(b)]) {
      edges.emplace_back(std::min(int(i), j), std::max(int(i), j));
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph(std::move(labels), std::move(edges));
}

namespace {

// All nodes strictly above `base` on side `d`, i.e. the subtree hanging off
// base's d-child, up to depth n.
void collect_subtree(const Node& base, int d, int n, std::vector<Node>& out) {
  out.clear();
  if (base.len >= n) return;
  std::vector<Node> stack{base.child(d)};
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    out.push_back(x);
    if (x.len < n) {
      stack.push_back(x.child(1));
      stack.push_back(x.child(0));
    }
  }
}

std::vector<VertexLabel> enumerate_vees(int n) {
  std::vector<VertexLabel> out;
  std::vector<Node> lefts, rights;
  for (const Node& x : TreeOrder(n).all_nodes()) {
    if (x.len >= n) continue;
    collect_subtree(x, 0, n, lefts);
    collect_subtree(x, 1, n, rights);
    for (const Node& y : lefts) {
      for (const Node& z : rights) {
        out.push_back(Vee{x, y, z});
      }
    }
  }
  return out;
}

std::vector<VertexLabel> enumerate_wyes(int n) {
  std::vector<VertexLabel> out;
  std::vector<Node> lefts, rights, stems;
  for (const Node& b : TreeOrder(n).all_nodes()) {
    if (b.len == 0 || b.len >= n) continue;
    collect_subtree(b, 0, n, lefts);
    collect_subtree(b, 1, n, rights);
    stems.clear();
    for (Node low = b.parent();; low = low.parent()) {
      stems.push_back(low);
      if (low.len == 0) break;
    }
    for (const Node& low : stems) {
      for (const Node& ul : lefts) {
        for (const Node& ur : rights) {
          out.push_back(Wye{low, b, ul, ur});
        }
      }
    }
  }
  return out;
}

Graph graph_from_tree_labels(std::vector<VertexLabel> labels) {
  std::sort(labels.begin(), labels.end(),
            [](const VertexLabel& u, const VertexLabel& v) {
              return vertex_key(u) < vertex_key(v);
            });
  std::unordered_map<std::uint64_t, std::vector<int>> vee_anchor, wye_anchor;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (const auto* v = std::get_if<Vee>(&labels[i])) {
      vee_anchor[v->x.packed()].push_back(int(i));
    } else {
      wye_anchor[std::get<Wye>(labels[i]).low.packed()].push_back(int(i));
    }
  }
  std::vector<std::pair<int, int>> edges;
  auto attach = [&](int u, const std::unordered_map<std::uint64_t,
                                                    std::vector<int>>& anchor,
                    const Node& tip) {
    auto it = anchor.find(tip.packed());
    if (it == anchor.end()) return;
    for (int v : it->second) {
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Tips t = tips_of(labels[i]);
    attach(int(i), vee_anchor, t.first);
    attach(int(i), vee_anchor, t.second);
    if (!t.is_vee) {
      attach(int(i), wye_anchor, t.first);
      attach(int(i), wye_anchor, t.second);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace

Graph build_G(int n) {
  if (n < 1) throw Error("Vee family needs n >= 1");
  return graph_from_tree_labels(enumerate_vees(n));
}

Graph build_H(int n) {
  if (n < 1) throw Error("Vee/Wye family needs n >= 1");
  std::vector<VertexLabel> labels = enumerate_vees(n);
  std::vector<VertexLabel> wyes = enumerate_wyes(n);
  labels.insert(labels.end(), std::make_move_iterator(wyes.begin()),
                std::make_move_iterator(wyes.end()));
  return graph_from_tree_labels(std::move(labels));
}

Coloring shift_msb_coloring(const Graph& shift_graph) {
  Coloring c;
  for (int v = 0; v < shift_graph.size(); ++v) {
    const auto* iv = std::get_if<IntervalVertex>(&shift_graph.label(v));
    if (!iv) throw Error("msb coloring applies to interval vertices only");
    unsigned diff = unsigned(iv->a - 1) ^ unsigned(iv->b - 1);
    c.set(v, std::bit_width(diff));
  }
  return c;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] == nv[j]) return false;
      if (nu[i] < nv[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return true;
}

}  // namespace vyg
