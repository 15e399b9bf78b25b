#pragma once

#include <string>

#include <json.hpp>

#include "vyg/btree.hpp"
#include "vyg/constructions.hpp"
#include "vyg/decomp.hpp"
#include "vyg/graphs.hpp"
#include "vyg/patterns.hpp"
#include "vyg/solvers.hpp"

namespace vyg {

// All serializers speak one fixed shape per kind, with object keys sorted by
// the library, so equal inputs give byte-equal output:
//   graph      {"vertices":[{"id":0,"key":...},...],"edges":[[u,v],...]}
//   path       {"intervals":{key:[a,b],...}}
//   tree       {"host":{"nodes":[...],"edges":[[i,j],...]},"bags":{label:[key,...]}}
//   embedding  {"n":n,"pos":{node:pos,...}}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json path_decomposition_to_json(const Graph& g,
                                          const PathDecomposition& d);
PathDecomposition path_decomposition_from_json(const Graph& g,
                                               const nlohmann::json& j);

nlohmann::json tree_decomposition_to_json(const Graph& g,
                                          const TreeDecomposition& d);
TreeDecomposition tree_decomposition_from_json(const Graph& g,
                                               const nlohmann::json& j);

nlohmann::json embedding_to_json(const Embedding& e);

nlohmann::json coloring_to_json(const Graph& g, const Coloring& c);
nlohmann::json validity_report_to_json(const Graph& g,
                                       const ValidityReport& rep);
nlohmann::json property_report_to_json(const Graph& g,
                                       const PropertyReport& rep);
nlohmann::json chromatic_result_to_json(const Graph& g, const SolveResult& r);
nlohmann::json pchr_result_to_json(const Graph& g, const SolveResult& r);

std::string graph_to_dot(const Graph& g);
std::string host_tree_to_dot(const TreeDecomposition& d);

// Canonical text form: two-space indent plus a trailing newline.
std::string json_to_text(const nlohmann::json& j);

}  // namespace vyg
