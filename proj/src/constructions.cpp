#include "vyg/constructions.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "vyg/errors.hpp"

namespace vyg {

namespace {

bool graphs_equal(const Graph& a, const Graph& b) {
  return a.keys() == b.keys() && a.edges() == b.edges();
}

}  // namespace

Coloring ShiftPathDecomposition::bag_coloring(int i) const {
  Coloring c;
  for (int v = 0; v < graph.size(); ++v) {
    const auto& iv = std::get<IntervalVertex>(graph.label(v));
    if (iv.a <= i && i <= iv.b) c.set(v, iv.a < i ? 1 : 2);
  }
  return c;
}

ShiftPathDecomposition shift_path_decomposition(int n) {
  ShiftPathDecomposition out;
  out.n = n;
  out.graph = build_shift(n);
  out.decomp.intervals.resize(out.graph.size());
  for (int v = 0; v < out.graph.size(); ++v) {
    const auto& iv = std::get<IntervalVertex>(out.graph.label(v));
    out.decomp.intervals[v] = Interval{iv.a, iv.b};
  }
  return out;
}

namespace {

struct MemberShape {
  Node low;
  Node branch;
  Node tip1, tip2;
};

MemberShape shape_of(const VertexLabel& label) {
  if (const auto* vee = std::get_if<Vee>(&label))
    return {vee->x, vee->x, vee->y, vee->z};
  if (const auto* wye = std::get_if<Wye>(&label))
    return {wye->low, wye->branch, wye->up_left, wye->up_right};
  throw Error("tree decomposition member is neither a vee nor a wye");
}

}  // namespace

Coloring NaturalTreeDecompositionH::bag_coloring(int host_index) const {
  const Node& t = host_nodes.at(std::size_t(host_index));
  Coloring c;
  for (int v : decomp.bags.at(std::size_t(host_index))) {
    MemberShape m = shape_of(graph.label(v));
    c.set(v, is_below(t, m.branch) ? 1 : 2);
  }
  return c;
}

NaturalTreeDecompositionH natural_tree_decomposition_H(int n) {
  NaturalTreeDecompositionH out;
  out.n = n;
  out.graph = build_H(n);
  out.host_nodes = TreeOrder(n).all_nodes();
  const int k = static_cast<int>(out.host_nodes.size());
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(k * 2);
  for (int i = 0; i < k; ++i) {
    out.decomp.host_labels.push_back(out.host_nodes[i].to_string());
    index.emplace(out.host_nodes[i].packed(), i);
  }
  for (int i = 0; i < k; ++i) {
    if (out.host_nodes[i].is_root()) continue;
    int p = index.at(out.host_nodes[i].parent().packed());
    out.decomp.host_edges.emplace_back(std::min(p, i), std::max(p, i));
  }
  std::sort(out.decomp.host_edges.begin(), out.decomp.host_edges.end());

  // The trace of a member is the union of the two low-to-tip paths; walk
  // each tip down to the shared part once.
  out.decomp.bags.resize(k);
  for (int v = 0; v < out.graph.size(); ++v) {
    MemberShape m = shape_of(out.graph.label(v));
    for (Node t = m.tip1;; t = t.parent()) {
      out.decomp.bags[index.at(t.packed())].push_back(v);
      if (t == m.low) break;
    }
    for (Node t = m.tip2; t != m.branch; t = t.parent())
      out.decomp.bags[index.at(t.packed())].push_back(v);
  }
  return out;
}

GeometricDecomposition geometric_path_decomposition_G(int n, bool shrink) {
  GeometricDecomposition out{n, shrink, build_G(n), Embedding(n), {}};
  out.decomp.intervals.resize(out.graph.size());
  const Pos pull = shrink ? 1 : 0;
  for (int v = 0; v < out.graph.size(); ++v) {
    const auto& vee = std::get<Vee>(out.graph.label(v));
    Pos a = out.embedding.position(vee.y) + pull;
    Pos b = out.embedding.position(vee.z) - pull;
    if (a > b) throw Error("degenerate geometric interval");
    out.decomp.intervals[v] = Interval{a, b};
  }
  return out;
}

BagThreePartition bag_three_partition(const GeometricDecomposition& gd,
                                      const Node& x0) {
  if (x0.len > gd.n) throw Error("node outside the tree");
  BagThreePartition out;
  out.position = gd.embedding.position(x0);
  for (int v = 0; v < gd.graph.size(); ++v) {
    const auto& iv = *gd.decomp.intervals[v];
    if (iv.a > out.position || out.position > iv.b) continue;
    Pos px = gd.embedding.position(std::get<Vee>(gd.graph.label(v)).x);
    if (px < out.position)
      out.c1.push_back(v);
    else if (px > out.position)
      out.c2.push_back(v);
    else
      out.c3.push_back(v);
  }
  return out;
}

Coloring bag_two_coloring_G(const GeometricDecomposition& gd, const Node& x0) {
  if (!gd.shrink)
    throw Error("two-coloring requires shrunk intervals");
  BagThreePartition parts = bag_three_partition(gd, x0);
  Coloring c;
  for (int v : parts.c1) c.set(v, 1);
  for (int v : parts.c3) c.set(v, 1);
  for (int v : parts.c2) c.set(v, 2);
  return c;
}

TwoColoringReport check_two_coloring_all_nodes(const GeometricDecomposition& gd) {
  std::vector<Pos> nodes;
  for (const auto& [node, p] : gd.embedding.materialize()) nodes.push_back(p);
  std::sort(nodes.begin(), nodes.end());
  // Some node position in [lo, hi] makes both members one color.
  auto hit = [&](Pos lo, Pos hi) -> std::optional<Pos> {
    if (lo > hi) return std::nullopt;
    auto it = std::lower_bound(nodes.begin(), nodes.end(), lo);
    if (it == nodes.end() || *it > hi) return std::nullopt;
    return *it;
  };
  constexpr std::size_t kSampleCap = 50;
  TwoColoringReport rep;
  std::vector<Pos> px(gd.graph.size());
  for (int v = 0; v < gd.graph.size(); ++v)
    px[v] = gd.embedding.position(std::get<Vee>(gd.graph.label(v)).x);
  for (auto [u, v] : gd.graph.edges()) {
    Pos a = std::max(gd.decomp.intervals[u]->a, gd.decomp.intervals[v]->a);
    Pos b = std::min(gd.decomp.intervals[u]->b, gd.decomp.intervals[v]->b);
    // Both colored one at p >= both low positions; both two strictly left.
    auto w = hit(std::max(a, std::max(px[u], px[v])), b);
    if (!w) w = hit(a, std::min(b, std::min(px[u], px[v]) - 1));
    if (w) {
      ++rep.violation_count;
      if (rep.samples.size() < kSampleCap) rep.samples.push_back({u, v, *w});
    }
  }
  rep.proper = rep.violation_count == 0;
  return rep;
}

FiveCycleExample five_cycle_example(int n) {
  if (n < 4) throw Error("five_cycle_example requires depth at least 4");
  FiveCycleExample out;
  auto mk = [](const char* x, const char* y, const char* z) {
    return make_vee(Node::parse(x), Node::parse(y), Node::parse(z));
  };
  out.vees = {mk("", "0", "1"), mk("1", "10", "11"), mk("10", "100", "101"),
              mk("101", "1010", "1011"), mk("1", "101", "11")};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      bool expect = (j == i + 1) || (i == 0 && j == 4);
      if (adjacent(VertexLabel(out.vees[i]), VertexLabel(out.vees[j])) !=
          expect)
        throw Error("five-cycle adjacency check failed");
    }
  }
  Embedding emb(n);
  out.witness = emb.position(Node::parse("101"));
  for (const Vee& v : out.vees) {
    if (emb.position(v.y) > out.witness || out.witness > emb.position(v.z))
      throw Error("five-cycle witness outside an interval");
  }
  return out;
}

ShiftEmbeddingG embed_shift_in_G(int p, int n) {
  if (p < 2) throw Error("embed_shift_in_G requires p >= 2");
  if (n < p - 1) throw Error("embed_shift_in_G requires n >= p - 1");
  ShiftEmbeddingG out;
  out.p = p;
  out.n = n;
  std::vector<Node> c(p + 1), d(p + 1);
  for (int i = 1; i <= p; ++i) {
    c[i] = Node::parse(std::string(i - 1, '1'));
    d[i] = c[i].child(0);
  }
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 1; j <= p; ++j) {
      out.pairs.emplace_back(i, j);
      out.vees.push_back(make_vee(c[i], d[i], c[j]));
      labels.push_back(IntervalVertex{i, j});
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < out.vees.size(); ++a)
    for (std::size_t b = a + 1; b < out.vees.size(); ++b)
      if (adjacent(VertexLabel(out.vees[a]), VertexLabel(out.vees[b])))
        edges.emplace_back(int(a), int(b));
  out.image = assemble_graph(std::move(labels), std::move(edges));
  out.isomorphic = graphs_equal(out.image, build_shift(p));
  return out;
}

ShiftEmbeddingH embed_shift_in_H(int m, int n) {
  if (m < 2) throw Error("embed_shift_in_H requires m >= 2");
  if (n < 3 * m - 1) throw Error("embed_shift_in_H requires n >= 3m - 1");
  ShiftEmbeddingH out;
  out.m = m;
  out.n = n;
  out.xs.resize(m);
  out.xs[0] = Node::parse("0");
  for (int i = 1; i < m; ++i) {
    out.xs[i] = out.xs[i - 1];
    for (char ch : {'1', '1', '0'}) out.xs[i] = out.xs[i].child(ch - '0');
  }
  out.ws.resize(m - 1);
  for (int j = 2; j <= m; ++j) {
    Node w = out.xs[j - 2];
    for (char ch : {'1', '1', '1'}) w = w.child(ch - '0');
    out.ws[j - 2] = w;
  }
  for (int j = 1; j <= m; ++j)
    out.vees.push_back(
        make_vee(out.xs[j - 1], out.xs[j - 1].child(0), out.xs[j - 1].child(1)));
  for (int j = 2; j <= m; ++j)
    out.prime_vees.push_back(
        make_vee(out.ws[j - 2], out.ws[j - 2].child(0), out.ws[j - 2].child(1)));

  std::vector<VertexLabel> labels;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out.pairs.emplace_back(i, j);
      out.wyes.push_back(make_wye(out.xs[i - 1], out.xs[j - 1], out.ws[j - 2]));
      labels.push_back(IntervalVertex{i, j});
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < out.wyes.size(); ++a)
    for (std::size_t b = a + 1; b < out.wyes.size(); ++b)
      if (adjacent(VertexLabel(out.wyes[a]), VertexLabel(out.wyes[b])))
        edges.emplace_back(int(a), int(b));
  out.image = assemble_graph(std::move(labels), std::move(edges));
  out.isomorphic = graphs_equal(out.image, build_shift(m));

  out.wyes_attach = true;
  for (std::size_t t = 0; t < out.pairs.size(); ++t) {
    int j = out.pairs[t].second;
    if (!adjacent(VertexLabel(out.wyes[t]), VertexLabel(out.vees[j - 1])) ||
        !adjacent(VertexLabel(out.wyes[t]),
                  VertexLabel(out.prime_vees[j - 2])))
      out.wyes_attach = false;
  }
  return out;
}

}  // namespace vyg
