#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "vyg/graphs.hpp"

using vyg::adjacent;
using vyg::Graph;
using vyg::IntervalVertex;
using vyg::Node;
using vyg::Opaque;
using vyg::Vee;
using vyg::VertexLabel;
using vyg::Wye;

namespace {

std::set<std::pair<std::string, std::string>> edge_keys(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.insert({g.key(u), g.key(v)});
  return out;
}

std::string vee_key(const oracle::VeeStr& v) {
  return "V:" + v.x + "," + v.y + "," + v.z;
}

std::string wye_key(const oracle::WyeStr& w) {
  return "Y:" + w.low + "," + w.ul + "," + w.ur;
}

void add_key_edge(std::set<std::pair<std::string, std::string>>& out,
                  std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  out.insert({std::move(a), std::move(b)});
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("vertex keys round trip and sort deterministically") {
  VertexLabel iv = IntervalVertex{3, 7};
  CHECK(vyg::vertex_key(iv) == "I:3,7");
  VertexLabel v = vyg::make_vee(Node::parse("1"), Node::parse("10"), Node::parse("11"));
  CHECK(vyg::vertex_key(v) == "V:1,10,11");
  VertexLabel w = vyg::make_wye(Node::root(), Node::parse("10"), Node::parse("110"));
  CHECK(vyg::vertex_key(w) == "Y:,10,110");
  CHECK(vyg::vertex_dot_label(w) == "Y:.,10,110");

  for (const std::string& key : {"I:3,7", "V:1,10,11", "Y:,10,110", "plain"}) {
    CHECK(vyg::vertex_key(vyg::parse_vertex_key(key)) == key);
  }
  CHECK_THROWS_AS(vyg::parse_vertex_key("I:7,3"), vyg::Error);
  CHECK_THROWS_AS(vyg::parse_vertex_key("I:3"), vyg::Error);
  CHECK_THROWS_AS(vyg::parse_vertex_key("V:1,10"), vyg::Error);
  CHECK_THROWS_AS(vyg::parse_vertex_key("V:1,10,11,0"), vyg::Error);
  CHECK_THROWS_AS(vyg::parse_vertex_key("V:1,11,10"), vyg::Error);
  CHECK_THROWS_AS(vyg::parse_vertex_key("Y:10,100,101"), vyg::Error);
}

TEST_CASE("make_vee and make_wye validate their legs") {
  CHECK_NOTHROW(vyg::make_vee(Node::root(), Node::parse("0"), Node::parse("1")));
  CHECK_NOTHROW(vyg::make_vee(Node::parse("1"), Node::parse("100"), Node::parse("111")));
  CHECK_THROWS_AS(vyg::make_vee(Node::root(), Node::parse("1"), Node::parse("0")), vyg::Error);
  CHECK_THROWS_AS(vyg::make_vee(Node::parse("1"), Node::parse("1"), Node::parse("11")), vyg::Error);
  CHECK_THROWS_AS(vyg::make_vee(Node::parse("1"), Node::parse("01"), Node::parse("11")), vyg::Error);

  Wye w = vyg::make_wye(Node::root(), Node::parse("100"), Node::parse("11"));
  CHECK(w.branch == Node::parse("1"));
  CHECK_THROWS_AS(vyg::make_wye(Node::parse("1"), Node::parse("100"), Node::parse("11")), vyg::Error);
  CHECK_THROWS_AS(vyg::make_wye(Node::parse("0"), Node::parse("100"), Node::parse("11")), vyg::Error);
  CHECK_THROWS_AS(vyg::make_wye(Node::root(), Node::parse("11"), Node::parse("100")), vyg::Error);
}

TEST_CASE("adjacency follows the head-to-tail and tip-to-low rules") {
  VertexLabel i12 = IntervalVertex{1, 2};
  VertexLabel i23 = IntervalVertex{2, 3};
  VertexLabel i13 = IntervalVertex{1, 3};
  CHECK(adjacent(i12, i23));
  CHECK(adjacent(i23, i12));
  CHECK(!adjacent(i12, i13));
  CHECK(!adjacent(i23, i13));
  CHECK_THROWS_AS(adjacent(i12, VertexLabel(IntervalVertex{1, 2})), vyg::Error);

  VertexLabel v_root = vyg::make_vee(Node::root(), Node::parse("0"), Node::parse("1"));
  VertexLabel v_at_1 = vyg::make_vee(Node::parse("1"), Node::parse("10"), Node::parse("11"));
  VertexLabel v_at_0 = vyg::make_vee(Node::parse("0"), Node::parse("00"), Node::parse("01"));
  CHECK(adjacent(v_root, v_at_1));
  CHECK(adjacent(v_at_1, v_root));
  CHECK(adjacent(v_root, v_at_0));
  CHECK(!adjacent(v_at_0, v_at_1));

  // A Wye reaches out only through its upper leaves, and a Vee's end points
  // never land on a Wye's low leaf.
  VertexLabel y = vyg::make_wye(Node::root(), Node::parse("10"), Node::parse("11"));
  VertexLabel v_at_10 = vyg::make_vee(Node::parse("10"), Node::parse("100"), Node::parse("101"));
  CHECK(adjacent(y, v_at_10));
  CHECK(adjacent(v_at_10, y));
  CHECK(!adjacent(y, v_root));
  CHECK(!adjacent(v_root, y));
  VertexLabel y_at_1 = vyg::make_wye(Node::parse("1"), Node::parse("110"), Node::parse("111"));
  CHECK(!adjacent(v_root, y_at_1));
  VertexLabel y_at_10 = vyg::make_wye(Node::parse("10"), Node::parse("1010"), Node::parse("1011"));
  CHECK(adjacent(y, y_at_10));

  CHECK(!adjacent(i12, v_root));
  CHECK(!adjacent(v_root, VertexLabel(Opaque{"x"})));
  CHECK(!adjacent(VertexLabel(Opaque{"x"}), VertexLabel(Opaque{"y"})));
}

TEST_CASE("adjacency is symmetric and irreflexive on random pairs") {
  Graph h = vyg::build_H(5);
  oracle::Lcg rng(20260815);
  for (int t = 0; t < 2000; ++t) {
    int u = rng.below(h.size());
    int v = rng.below(h.size());
    if (u == v) {
      CHECK_THROWS_AS(adjacent(h.label(u), h.label(v)), vyg::Error);
    } else {
      CHECK(adjacent(h.label(u), h.label(v)) == adjacent(h.label(v), h.label(u)));
      CHECK(adjacent(h.label(u), h.label(v)) == h.has_edge(u, v));
    }
  }
}

TEST_CASE("assemble_graph sorts, remaps, and dedupes") {
  std::vector<VertexLabel> labels{Opaque{"b"}, Opaque{"a"}, Opaque{"c"}};
  Graph g = vyg::assemble_graph(labels, {{0, 1}, {1, 0}, {2, 1}});
  REQUIRE(g.size() == 3);
  CHECK(g.key(0) == "a");
  CHECK(g.key(1) == "b");
  CHECK(g.key(2) == "c");
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == std::pair<int, int>(0, 1));
  CHECK(g.edges()[1] == std::pair<int, int>(0, 2));
  CHECK_THROWS_AS(vyg::assemble_graph(labels, {{1, 1}}), vyg::Error);
  std::vector<VertexLabel> dup{Opaque{"a"}, Opaque{"a"}};
  CHECK_THROWS_AS(vyg::assemble_graph(dup, {}), vyg::Error);
}

TEST_CASE("neighbor queries agree with the edge list") {
  Graph g = vyg::build_G(3);
  std::map<int, std::set<int>> nb;
  for (auto [u, v] : g.edges()) {
    nb[u].insert(v);
    nb[v].insert(u);
  }
  for (int v = 0; v < g.size(); ++v) {
    auto span = g.neighbors(v);
    std::set<int> got(span.begin(), span.end());
    CHECK(got == nb[v]);
    CHECK(g.degree(v) == int(nb[v].size()));
    for (int u : nb[v]) CHECK(g.has_edge(v, u));
  }
  CHECK(!g.has_edge(0, 0));
}

TEST_CASE("interval family matches the brute pair scan") {
  const std::size_t expect_v[] = {1, 3, 6, 10, 15, 21, 28};
  const std::size_t expect_e[] = {0, 1, 4, 10, 20, 35, 56};
  for (int n = 2; n <= 8; ++n) {
    Graph g = vyg::build_shift(n);
    CHECK(g.size() == int(expect_v[n - 2]));
    CHECK(g.edge_count() == expect_e[n - 2]);
    // n choose 3: each triple a < b < c yields exactly the edge [a,b]-[b,c].
    CHECK(g.edge_count() ==
          std::size_t(n) * std::size_t(n - 1) * std::size_t(n - 2) / 6);

    auto sv = oracle::shift_vertices(n);
    std::set<std::pair<std::string, std::string>> want;
    for (std::size_t i = 0; i < sv.size(); ++i)
      for (std::size_t j = i + 1; j < sv.size(); ++j)
        if (oracle::shift_adjacent(sv[i], sv[j]))
          add_key_edge(want,
                       "I:" + std::to_string(sv[i].first) + "," + std::to_string(sv[i].second),
                       "I:" + std::to_string(sv[j].first) + "," + std::to_string(sv[j].second));
    CHECK(edge_keys(g) == want);
  }
  CHECK_THROWS_AS(vyg::build_shift(1), vyg::Error);
}

TEST_CASE("Vee family matches the string enumeration") {
  const std::size_t expect_v[] = {1, 11, 71, 367, 1695};
  const std::size_t expect_e[] = {0, 6, 166, 2462};
  for (int n = 1; n <= 5; ++n) {
    Graph g = vyg::build_G(n);
    CHECK(g.size() == int(expect_v[n - 1]));
    if (n <= 4) CHECK(g.edge_count() == expect_e[n - 1]);

    auto vs = oracle::all_vees(n);
    REQUIRE(g.size() == int(vs.size()));
    std::set<std::string> keys;
    for (const auto& v : vs) keys.insert(vee_key(v));
    for (int i = 0; i < g.size(); ++i) CHECK(keys.count(g.key(i)) == 1);

    if (n <= 4) {
      std::set<std::pair<std::string, std::string>> want;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (oracle::vee_vee_adjacent(vs[i], vs[j]))
            add_key_edge(want, vee_key(vs[i]), vee_key(vs[j]));
      CHECK(edge_keys(g) == want);
    }
  }
}

TEST_CASE("Vee and Wye family matches the string enumeration") {
  const std::size_t expect_v[] = {1, 13, 97};
  const std::size_t expect_e[] = {0, 6, 178};
  for (int n = 1; n <= 3; ++n) {
    Graph g = vyg::build_H(n);
    CHECK(g.size() == int(expect_v[n - 1]));
    CHECK(g.edge_count() == expect_e[n - 1]);

    auto vs = oracle::all_vees(n);
    auto ws = oracle::all_wyes(n);
    REQUIRE(g.size() == int(vs.size() + ws.size()));
    std::set<std::pair<std::string, std::string>> want;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (oracle::vee_vee_adjacent(vs[i], vs[j]))
          add_key_edge(want, vee_key(vs[i]), vee_key(vs[j]));
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        if (oracle::wye_wye_adjacent(ws[i], ws[j]))
          add_key_edge(want, wye_key(ws[i]), wye_key(ws[j]));
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (oracle::wye_vee_adjacent(ws[i], vs[j]))
          add_key_edge(want, wye_key(ws[i]), vee_key(vs[j]));
    }
    CHECK(edge_keys(g) == want);
  }
  CHECK(vyg::build_H(4).size() == 367 + 194);
}

TEST_CASE("the Vee family is the induced all-Vee part of the larger one") {
  for (int n = 2; n <= 3; ++n) {
    Graph g = vyg::build_G(n);
    Graph h = vyg::build_H(n);
    auto he = edge_keys(h);
    std::set<std::pair<std::string, std::string>> induced;
    for (const auto& e : he)
      if (e.first[0] == 'V' && e.second[0] == 'V') induced.insert(e);
    CHECK(edge_keys(g) == induced);
  }
}

TEST_CASE("most significant bit coloring is proper and small") {
  for (int n : {2, 3, 4, 5, 6, 7, 8, 16, 33, 64}) {
    Graph g = vyg::build_shift(n);
    vyg::Coloring c = vyg::shift_msb_coloring(g);
    REQUIRE(int(c.size()) == g.size());
    for (auto [u, v] : g.edges()) CHECK(c.color(u) != c.color(v));
    int lg = 0;
    while ((1 << lg) < n) ++lg;
    for (int v = 0; v < g.size(); ++v) {
      CHECK(c.color(v) >= 1);
      CHECK(c.color(v) <= lg);
    }
  }
}

TEST_CASE("triangle freeness") {
  CHECK(vyg::is_triangle_free(vyg::build_shift(8)));
  CHECK(vyg::is_triangle_free(vyg::build_G(4)));
  CHECK(vyg::is_triangle_free(vyg::build_H(3)));
  std::vector<VertexLabel> tri{Opaque{"a"}, Opaque{"b"}, Opaque{"c"}};
  Graph k3 = vyg::assemble_graph(tri, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(!vyg::is_triangle_free(k3));
}

}  // TEST_SUITE
