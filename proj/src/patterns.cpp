#include "vyg/patterns.hpp"

#include <algorithm>
#include <array>

#include "vyg/errors.hpp"

namespace vyg {

const char* to_string(PatternClass c) {
  switch (c) {
    case PatternClass::Q1: return "Q1";
    case PatternClass::Q2: return "Q2";
    case PatternClass::Q3: return "Q3";
    case PatternClass::Q4: return "Q4";
    case PatternClass::Q5: return "Q5";
    case PatternClass::Q6: return "Q6";
    case PatternClass::Q7: return "Q7";
    case PatternClass::Other: return "Other";
  }
  return "?";
}

const char* to_string(RelationLabel r) {
  switch (r) {
    case RelationLabel::OMR: return "OMR";
    case RelationLabel::OML: return "OML";
    case RelationLabel::DMR: return "DMR";
    case RelationLabel::DML: return "DML";
    case RelationLabel::ISF: return "ISF";
    case RelationLabel::IFS: return "IFS";
  }
  return "?";
}

PatternClass classify_pair(const Vee& v1, const Vee& v2) {
  if (v2.x == v1.z) return PatternClass::Q1;
  if (v2.x == v1.y) return PatternClass::Q2;
  if (strictly_below(v1.z, v2.x))
    return side_above(v1.z, v2.x) == Side::Right ? PatternClass::Q3
                                                 : PatternClass::Q5;
  if (strictly_below(v1.y, v2.x))
    return side_above(v1.y, v2.x) == Side::Left ? PatternClass::Q4
                                                : PatternClass::Q6;
  if (!comparable(v1.x, v2.x)) {
    Node m = meet(v1.x, v2.x);
    if (side_above(m, v1.x) == Side::Left &&
        side_above(m, v2.x) == Side::Right)
      return PatternClass::Q7;
  }
  return PatternClass::Other;
}

RelationLabel interval_relation(const Interval& i1, const Interval& i2) {
  if (i1.a >= i1.b || i2.a >= i2.b) throw Error("degenerate interval");
  if (i1.a == i2.a || i1.a == i2.b || i1.b == i2.a || i1.b == i2.b)
    throw Error("coinciding endpoints");
  if (i1.b < i2.a) return RelationLabel::DMR;
  if (i2.b < i1.a) return RelationLabel::DML;
  if (i1.a < i2.a && i2.b < i1.b) return RelationLabel::ISF;
  if (i2.a < i1.a && i1.b < i2.b) return RelationLabel::IFS;
  if (i1.a < i2.a) return RelationLabel::OMR;
  return RelationLabel::OML;
}

const std::map<PatternClass, RelationLabel>& expected_relations() {
  static const std::map<PatternClass, RelationLabel> table = {
      {PatternClass::Q1, RelationLabel::OMR},
      {PatternClass::Q2, RelationLabel::OML},
      {PatternClass::Q3, RelationLabel::DMR},
      {PatternClass::Q4, RelationLabel::DML},
      {PatternClass::Q5, RelationLabel::ISF},
      {PatternClass::Q6, RelationLabel::ISF},
      {PatternClass::Q7, RelationLabel::DMR},
  };
  return table;
}

PropertyReport property_report(const Graph& vee_graph,
                               const PathDecomposition& d) {
  const int n = vee_graph.size();
  if (static_cast<int>(d.intervals.size()) != n)
    throw Error("path decomposition does not match the graph");
  std::vector<Vee> vees(n);
  std::vector<Interval> ivs(n);
  for (int v = 0; v < n; ++v) {
    const auto* vee = std::get_if<Vee>(&vee_graph.label(v));
    if (!vee) throw Error("property report requires an all-Vee graph");
    vees[v] = *vee;
    if (!d.intervals[v]) throw Error("vertex without an interval");
    ivs[v] = *d.intervals[v];
    if (ivs[v].a >= ivs[v].b) throw Error("degenerate interval");
  }

  constexpr std::size_t kViolationSample = 100;
  PropertyReport rep;
  std::array<unsigned, 8> seen{};  // bitmask of relations per class
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      PatternClass c = classify_pair(vees[u], vees[v]);
      if (c == PatternClass::Other) continue;
      const Interval& a = ivs[u];
      const Interval& b = ivs[v];
      if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) {
        ++rep.total_violations;
        if (rep.violations.size() < kViolationSample)
          rep.violations.push_back({u, v, "coinciding endpoints"});
        continue;
      }
      RelationLabel r = interval_relation(a, b);
      seen[static_cast<int>(c)] |= 1u << static_cast<int>(r);
      if (r != expected_relations().at(c)) {
        ++rep.total_violations;
        if (rep.violations.size() < kViolationSample)
          rep.violations.push_back(
              {u, v, std::string("unexpected relation ") + to_string(r)});
      }
    }
  }

  rep.conformant = rep.total_violations == 0;
  for (int ci = 0; ci < 7; ++ci) {
    auto c = static_cast<PatternClass>(ci);
    auto& set = rep.observed[c];
    for (int ri = 0; ri < 6; ++ri)
      if (seen[ci] >> ri & 1) set.insert(static_cast<RelationLabel>(ri));
    if (!set.empty() &&
        (set.size() > 1 || *set.begin() != expected_relations().at(c)))
      rep.conformant = false;
  }
  return rep;
}

BinaryTree BinaryTree::complete(int k) {
  BinaryTree t;
  t.nodes = TreeOrder(k).all_nodes();
  return t;
}

BinaryTree BinaryTree::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty()) throw Error("empty node set");
  std::sort(nodes.begin(), nodes.end(), lex_less);
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i] == nodes[i - 1]) throw Error("duplicate node");
  BinaryTree t;
  t.nodes = std::move(nodes);
  for (const Node& x : t.nodes) {
    if (x.is_root()) continue;
    if (t.index_of(x.parent()) < 0) throw Error("node set is not prefix-closed");
  }
  return t;
}

int BinaryTree::index_of(const Node& x) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), x, lex_less);
  if (it == nodes.end() || !(*it == x)) return -1;
  return static_cast<int>(it - nodes.begin());
}

bool is_strong_copy(const BinaryTree& source, const StrongCopyMap& image,
                    int n) {
  const std::size_t k = source.nodes.size();
  if (image.size() != k) return false;
  for (const Node& t : image)
    if (t.len > n) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Node &si = source.nodes[i], &sj = source.nodes[j];
      const Node &ti = image[i], &tj = image[j];
      if (ti == tj) return false;
      if (is_below(si, sj) != is_below(ti, tj)) return false;
      if (is_below(sj, si) != is_below(tj, ti)) return false;
      if (strictly_below(si, sj) && side_above(si, sj) != side_above(ti, tj))
        return false;
      if (strictly_below(sj, si) && side_above(sj, si) != side_above(tj, ti))
        return false;
    }
  }
  return true;
}

namespace {

struct CopyEnumerator {
  const std::vector<Node>& src;  // lex order, which is preorder
  int n;
  std::vector<int> parent;  // index of the source parent, -1 for the first
  std::vector<int> side;    // digit from the parent
  std::vector<int> below;   // height of the source subtree under each node
  StrongCopyMap img;
  std::vector<StrongCopyMap> out;

  explicit CopyEnumerator(const BinaryTree& source, int depth)
      : src(source.nodes), n(depth) {
    const int k = static_cast<int>(src.size());
    parent.assign(k, -1);
    side.assign(k, 0);
    below.assign(k, 0);
    for (int i = k - 1; i >= 1; --i) {
      Node p = src[i].parent();
      int pi = -1;
      for (int j = i - 1; j >= 0; --j) {
        if (src[j] == p) {
          pi = j;
          break;
        }
      }
      parent[i] = pi;
      side[i] = src[i].digit(src[i].len - 1);
      below[pi] = std::max(below[pi], below[i] + 1);
    }
    img.resize(k);
  }

  // Every node at or under `base` shallow enough to fit the subtree of the
  // k-th source node, visited in dictionary order.
  void place(int k, const Node& base) {
    if (base.len + below[k] > n) return;
    std::vector<Node> stack{base};
    while (!stack.empty()) {
      Node t = stack.back();
      stack.pop_back();
      img[k] = t;
      if (k + 1 == static_cast<int>(src.size()))
        out.push_back(img);
      else
        descend(k + 1);
      if (t.len + below[k] < n) {
        stack.push_back(t.child(1));
        stack.push_back(t.child(0));
      }
    }
  }

  void descend(int k) {
    place(k, parent[k] < 0 ? Node::root() : img[parent[k]].child(side[k]));
  }
};

}  // namespace

std::vector<StrongCopyMap> enumerate_strong_copies(const BinaryTree& source,
                                                   int n,
                                                   std::size_t source_cap) {
  if (source.nodes.size() > source_cap)
    throw SizeCapError("strong copy enumeration", source.nodes.size(),
                       source_cap);
  CopyEnumerator en(source, n);
  en.descend(0);
  return std::move(en.out);
}

std::optional<StrongCopyMap> find_monochromatic_copy(
    int n, int p, const BinaryTree& source,
    const std::function<int(const StrongCopyMap&)>& coloring) {
  BinaryTree tp = BinaryTree::complete(p);
  auto outer = enumerate_strong_copies(tp, n);
  auto inner = enumerate_strong_copies(source, p);
  StrongCopyMap composed(source.nodes.size());
  for (const StrongCopyMap& big : outer) {
    bool mono = true;
    bool first = true;
    int color = 0;
    for (const StrongCopyMap& small : inner) {
      for (std::size_t i = 0; i < small.size(); ++i)
        composed[i] = big[tp.index_of(small[i])];
      int c = coloring(composed);
      if (first) {
        color = c;
        first = false;
      } else if (c != color) {
        mono = false;
        break;
      }
    }
    if (mono) return big;
  }
  return std::nullopt;
}

}  // namespace vyg
