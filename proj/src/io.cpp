#include "vyg/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vyg/errors.hpp"

namespace vyg {

namespace {

using nlohmann::json;

std::map<std::string, int> key_index(const Graph& g) {
  std::map<std::string, int> m;
  for (int v = 0; v < g.size(); ++v) m.emplace(g.key(v), v);
  return m;
}

int vertex_by_key(const std::map<std::string, int>& index,
                  const std::string& key) {
  auto it = index.find(key);
  if (it == index.end()) throw Error("unknown vertex key: " + key);
  return it->second;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.size(); ++v)
    vertices.push_back({{"id", v}, {"key", g.key(v)}});
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error("graph document needs vertices and edges");
  std::vector<VertexLabel> labels;
  int expect = 0;
  for (const auto& v : j.at("vertices")) {
    if (v.at("id").get<int>() != expect++)
      throw Error("vertex ids must be consecutive from zero");
    labels.push_back(parse_vertex_key(v.at("key").get<std::string>()));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("edge must be a pair");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return assemble_graph(std::move(labels), std::move(edges));
}

json path_decomposition_to_json(const Graph& g, const PathDecomposition& d) {
  if (static_cast<int>(d.intervals.size()) != g.size())
    throw Error("path decomposition does not match the graph");
  json intervals = json::object();
  for (int v = 0; v < g.size(); ++v) {
    if (!d.intervals[v]) continue;
    intervals[g.key(v)] = {d.intervals[v]->a, d.intervals[v]->b};
  }
  return json{{"intervals", std::move(intervals)}};
}

PathDecomposition path_decomposition_from_json(const Graph& g, const json& j) {
  if (!j.is_object() || !j.contains("intervals"))
    throw Error("path decomposition document needs intervals");
  auto index = key_index(g);
  PathDecomposition d;
  d.intervals.assign(g.size(), std::nullopt);
  for (const auto& [key, val] : j.at("intervals").items()) {
    int v = vertex_by_key(index, key);
    if (!val.is_array() || val.size() != 2)
      throw Error("interval must be a pair");
    d.intervals[v] = Interval{val.at(0).get<Pos>(), val.at(1).get<Pos>()};
  }
  return d;
}

json tree_decomposition_to_json(const Graph& g, const TreeDecomposition& d) {
  json nodes = json::array();
  for (const auto& label : d.host_labels) nodes.push_back(label);
  json hedges = json::array();
  for (auto [a, b] : d.host_edges) hedges.push_back({a, b});
  json bags = json::object();
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    json bag = json::array();
    for (int v : d.bags[i]) bag.push_back(g.key(v));
    bags[d.host_labels.at(i)] = std::move(bag);
  }
  return json{{"host", {{"nodes", std::move(nodes)}, {"edges", std::move(hedges)}}},
              {"bags", std::move(bags)}};
}

TreeDecomposition tree_decomposition_from_json(const Graph& g, const json& j) {
  if (!j.is_object() || !j.contains("host") || !j.contains("bags"))
    throw Error("tree decomposition document needs host and bags");
  TreeDecomposition d;
  std::map<std::string, int> hosts;
  for (const auto& label : j.at("host").at("nodes")) {
    std::string s = label.get<std::string>();
    if (!hosts.emplace(s, static_cast<int>(d.host_labels.size())).second)
      throw Error("duplicate host label");
    d.host_labels.push_back(std::move(s));
  }
  for (const auto& e : j.at("host").at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("host edge must be a pair");
    d.host_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  d.bags.assign(d.host_labels.size(), {});
  auto index = key_index(g);
  for (const auto& [label, bag] : j.at("bags").items()) {
    auto it = hosts.find(label);
    if (it == hosts.end()) throw Error("bag for unknown host label: " + label);
    for (const auto& key : bag)
      d.bags[it->second].push_back(
          vertex_by_key(index, key.get<std::string>()));
    std::sort(d.bags[it->second].begin(), d.bags[it->second].end());
  }
  return d;
}

json embedding_to_json(const Embedding& e) {
  json pos = json::object();
  for (const auto& [node, p] : e.materialize()) pos[node] = p;
  return json{{"n", e.n}, {"pos", std::move(pos)}};
}

json coloring_to_json(const Graph& g, const Coloring& c) {
  json out = json::object();
  for (const auto& [v, color] : c.by_vertex) out[g.key(v)] = color;
  return out;
}

json validity_report_to_json(const Graph& g, const ValidityReport& rep) {
  json uncovered_vertices = json::array();
  for (int v : rep.uncovered_vertices) uncovered_vertices.push_back(g.key(v));
  json uncovered_edges = json::array();
  for (auto [u, v] : rep.uncovered_edges)
    uncovered_edges.push_back({g.key(u), g.key(v)});
  json bad_intervals = json::array();
  for (int v : rep.bad_intervals) bad_intervals.push_back(g.key(v));
  json broken_traces = json::array();
  for (int v : rep.broken_traces) broken_traces.push_back(g.key(v));
  return json{{"valid", rep.valid},
              {"uncovered_vertices", std::move(uncovered_vertices)},
              {"uncovered_edges", std::move(uncovered_edges)},
              {"bad_intervals", std::move(bad_intervals)},
              {"broken_traces", std::move(broken_traces)}};
}

json property_report_to_json(const Graph& g, const PropertyReport& rep) {
  json observed = json::object();
  for (const auto& [c, labels] : rep.observed) {
    json arr = json::array();
    for (auto r : labels) arr.push_back(to_string(r));
    observed[to_string(c)] = std::move(arr);
  }
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"v1", g.key(v.v1)},
                          {"v2", g.key(v.v2)},
                          {"reason", v.reason}});
  return json{{"conformant", rep.conformant},
              {"observed", std::move(observed)},
              {"violations", std::move(violations)},
              {"total_violations", rep.total_violations}};
}

json chromatic_result_to_json(const Graph& g, const SolveResult& r) {
  return json{{"value", r.value},
              {"nodes_explored", r.nodes_explored},
              {"coloring", coloring_to_json(g, r.coloring)}};
}

json pchr_result_to_json(const Graph& g, const SolveResult& r) {
  json order = json::array();
  for (int v : r.intro_order) order.push_back(g.key(v));
  json j = path_decomposition_to_json(g, r.decomposition);
  return json{{"value", r.value},
              {"nodes_explored", r.nodes_explored},
              {"intro_order", std::move(order)},
              {"intervals", std::move(j.at("intervals"))}};
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.size(); ++v)
    out << "  " << v << " [label=\"" << vertex_dot_label(g.label(v))
        << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string host_tree_to_dot(const TreeDecomposition& d) {
  std::ostringstream out;
  out << "graph host {\n";
  for (std::size_t i = 0; i < d.host_labels.size(); ++i) {
    const std::string& l = d.host_labels[i];
    out << "  " << i << " [label=\"" << (l.empty() ? "." : l) << "\"];\n";
  }
  for (auto [a, b] : d.host_edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string json_to_text(const json& j) { return j.dump(2) + "\n"; }

}  // namespace vyg
