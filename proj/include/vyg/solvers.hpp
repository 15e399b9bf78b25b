#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vyg/coloring.hpp"
#include "vyg/decomp.hpp"
#include "vyg/graphs.hpp"

namespace vyg {

struct SolveResult {
  int value = 0;
  std::uint64_t nodes_explored = 0;
  // chromatic_number: a proper coloring with `value` colors.
  Coloring coloring;
  // pchr_exact: an introduction order realizing the optimum, its minimal
  // intervals, and one proper coloring per bag along the order.
  std::vector<int> intro_order;
  PathDecomposition decomposition;
  std::vector<Coloring> bag_colorings;
};

// Exact chromatic number.  Empty, edgeless, and bipartite graphs are settled
// directly; otherwise clique and greedy bounds bracket a branch-and-bound
// search which alone is subject to cfg.size_cap (throws SizeCapError when
// the instance still needs branching after reductions and exceeds the cap).
SolveResult chromatic_number(const Graph& g, const SolverConfig& cfg = {});

// A proper k-coloring, or nullopt when none exists.  Same cap rule.
std::optional<Coloring> is_k_colorable(const Graph& g, int k,
                                       const SolverConfig& cfg = {});

// Exact path-chromatic number by subset dynamic programming over
// introduction orders; |V| <= 22.  The bag of v given the not-yet-introduced
// set S contains v, every u in S with a neighbor already introduced, and
// every neighbor of v inside S.
SolveResult pchr_exact(const Graph& g, const SolverConfig& cfg = {});

// Independent cross-check: minimizes the largest bag chromatic number over
// all |V|! introduction orders with its own small coloring routine; |V| <= 9.
int pchr_brute_permutations(const Graph& g);

namespace detail {

// Label-free view used for induced bag subgraphs.  Adjacency lists are
// sorted and symmetric.
struct RawGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

RawGraph raw_from_graph(const Graph& g);
RawGraph raw_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

struct RawResult {
  int value = 0;
  std::vector<int> colors;  // 1-based, size n
  std::uint64_t nodes = 0;
};

RawResult chromatic_of(const RawGraph& g, const SolverConfig& cfg);
std::optional<std::vector<int>> k_colorable(const RawGraph& g, int k,
                                            const SolverConfig& cfg,
                                            std::uint64_t& nodes);

}  // namespace detail

}  // namespace vyg
