#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vyg/btree.hpp"
#include "vyg/coloring.hpp"
#include "vyg/graphs.hpp"

namespace vyg {

struct Interval {
  Pos a = 0;
  Pos b = 0;
};

// One interval per vertex id, indexed by id.  Bags are read off at points of
// the line: the bag at p holds every vertex whose interval contains p.  An
// interval left unset is reported as an uncovered vertex by the verifier.
struct PathDecomposition {
  std::vector<std::optional<Interval>> intervals;
};

// Host tree given by labeled nodes and index edges; bags hold sorted vertex
// ids, one bag per host node.
struct TreeDecomposition {
  std::vector<std::string> host_labels;
  std::vector<std::pair<int, int>> host_edges;
  std::vector<std::vector<int>> bags;
};

// Shared knobs for the exact solvers.  `size_cap` bounds the instances on
// which exponential search may run; instances settled polynomially (empty,
// edgeless, bipartite, or greedy meeting the lower bound) ignore it.
// `jobs` parallelizes independent per-bag solves; results do not depend on
// it.
struct SolverConfig {
  int size_cap = 64;
  int jobs = 1;
};

struct ValidityReport {
  bool valid = true;
  // Vertices with no interval / in no bag.
  std::vector<int> uncovered_vertices;
  // Edges whose intervals are disjoint / that appear together in no bag.
  std::vector<std::pair<int, int>> uncovered_edges;
  // Vertices whose interval has a > b.
  std::vector<int> bad_intervals;
  // Vertices whose set of host nodes is not connected in the host tree.
  std::vector<int> broken_traces;
};

ValidityReport verify_path_decomposition(const Graph& g,
                                         const PathDecomposition& d);

// Also checks the host itself and throws on a disconnected host or one with
// a cycle, or on bags referencing unknown vertex ids.
ValidityReport verify_tree_decomposition(const Graph& g,
                                         const TreeDecomposition& d);

// Largest exact chromatic number over all bags.  For a path decomposition
// the bags are sampled at every distinct interval endpoint, which dominates
// every other point of the line.  Requires a valid decomposition.
int decomposition_chromatic(const Graph& g, const PathDecomposition& d,
                            const SolverConfig& cfg = {});
int decomposition_chromatic(const Graph& g, const TreeDecomposition& d,
                            const SolverConfig& cfg = {});

struct BagChromaticDetail {
  int value = 0;
  // A point / host node index whose bag attains the maximum.
  Pos witness_position = 0;
  int witness_bag = -1;
};
BagChromaticDetail decomposition_chromatic_detail(const Graph& g,
                                                  const PathDecomposition& d,
                                                  const SolverConfig& cfg = {});
BagChromaticDetail decomposition_chromatic_detail(const Graph& g,
                                                  const TreeDecomposition& d,
                                                  const SolverConfig& cfg = {});

// Largest bag size minus one; -1 when there are no bags at all.
int decomposition_width(const PathDecomposition& d);
int decomposition_width(const TreeDecomposition& d);

// Spreads endpoints onto 0..2|V|-1 keeping every bag relation: sweep order
// is (position, left-before-right, vertex key).  Output is valid whenever
// the input is, interval overlaps are preserved, and the relative order of
// already-distinct endpoints never changes.
PathDecomposition normalize_path(const Graph& g, const PathDecomposition& d);

// The path decomposition as a tree decomposition: host nodes are the
// distinct endpoints in order, with runs of identical bags collapsed.
TreeDecomposition path_as_tree(const Graph& g, const PathDecomposition& d);

// True when every assigned pair of adjacent vertices differs.  With
// `require_total` every vertex must be colored.
bool is_proper_coloring(const Graph& g, const Coloring& c, bool require_total);

}  // namespace vyg
