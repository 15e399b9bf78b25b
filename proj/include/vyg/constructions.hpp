#pragma once

#include <array>
#include <vector>

#include "vyg/btree.hpp"
#include "vyg/coloring.hpp"
#include "vyg/decomp.hpp"
#include "vyg/graphs.hpp"

namespace vyg {

// The interval graph of intervals in [1, n] with itself as its own path
// decomposition: the interval of the vertex [a,b] is [a,b].
struct ShiftPathDecomposition {
  int n = 0;
  Graph graph;
  PathDecomposition decomp;

  // Two colors make every bag proper: at point i the members with a < i
  // form one class and those with a = i the other.
  Coloring bag_coloring(int i) const;
};
ShiftPathDecomposition shift_path_decomposition(int n);

// Tree decomposition of the Vee-and-Wye graph whose host is the depth-n
// tree itself: the bag at t holds every member whose low point is at or
// under t while t stays under one of its end points.
struct NaturalTreeDecompositionH {
  int n = 0;
  Graph graph;
  TreeDecomposition decomp;
  std::vector<Node> host_nodes;  // aligned with decomp.host_labels

  // Members still at or under their branch point against those past it;
  // both classes are independent, so every bag is at most 2-chromatic.
  Coloring bag_coloring(int host_index) const;
};
NaturalTreeDecompositionH natural_tree_decomposition_H(int n);

// Path decomposition of the Vee graph read off the integer drawing: the
// interval of (x,y,z) runs from the position of y to the position of z,
// pulled in by one unit on both sides when `shrink` is set.
struct GeometricDecomposition {
  int n = 0;
  bool shrink = true;
  Graph graph;
  Embedding embedding;
  PathDecomposition decomp;
};
GeometricDecomposition geometric_path_decomposition_G(int n, bool shrink);

// The bag at the position of a tree node x0, split by where each member's
// low point sits relative to x0: left of it, right of it, or on it.  Each
// part is independent on its own; the first and third are jointly
// independent only for shrunk intervals.
struct BagThreePartition {
  Pos position = 0;
  std::vector<int> c1, c2, c3;
};
BagThreePartition bag_three_partition(const GeometricDecomposition& gd,
                                      const Node& x0);

// Two-colors the bag at the position of x0 (first-and-third part against
// the second).  Requires shrunk intervals.
Coloring bag_two_coloring_G(const GeometricDecomposition& gd, const Node& x0);

// Checks, at the position of every tree node, that coloring each bag by
// "low point at or left of the node" against "strictly right of it" is
// proper.  Holds for shrunk intervals; unshrunk intervals admit adjacent
// members whose low points both sit at or left of some covered node.
struct TwoColoringReport {
  bool proper = true;
  std::size_t violation_count = 0;
  struct Sample {
    int u = 0;
    int v = 0;
    Pos position = 0;
  };
  std::vector<Sample> samples;  // capped; the count above is exact
};
TwoColoringReport check_two_coloring_all_nodes(const GeometricDecomposition& gd);

// Five Vees of the depth-n tree inducing a five-cycle whose unshrunk
// intervals all cover one common position.  Requires n >= 4.  The returned
// object is validated on construction.
struct FiveCycleExample {
  std::array<Vee, 5> vees;
  Pos witness = 0;
};
FiveCycleExample five_cycle_example(int n);

// Vees V[i,j] over nested right spines realizing the interval graph of
// intervals in [1, p] inside the Vee graph of depth n.  Requires p >= 2 and
// n >= p - 1.
struct ShiftEmbeddingG {
  int p = 0;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // (i,j), i < j, in dictionary order
  std::vector<Vee> vees;                   // aligned with pairs
  Graph image;                             // induced adjacency, interval labels
  bool isomorphic = false;                 // image equals build_shift(p)
};
ShiftEmbeddingG embed_shift_in_G(int p, int n);

// Wyes Y[i,j] realizing the interval graph of intervals in [1, m] inside
// the Vee-and-Wye graph of depth n, with two dedicated Vees hanging off
// every column.  Requires m >= 2 and n >= 3m - 1.
struct ShiftEmbeddingH {
  int m = 0;
  int n = 0;
  std::vector<Node> xs;                    // x_1..x_m, index i-1
  std::vector<Node> ws;                    // w_2..w_m, index j-2
  std::vector<Vee> vees;                   // V_1..V_m
  std::vector<Vee> prime_vees;             // V'_2..V'_m
  std::vector<std::pair<int, int>> pairs;  // (i,j), i < j, dictionary order
  std::vector<Wye> wyes;                   // Y[i,j], aligned with pairs
  Graph image;                             // induced adjacency on the wyes
  bool isomorphic = false;                 // image equals build_shift(m)
  bool wyes_attach = false;                // every Y[i,j] meets V_j and V'_j
};
ShiftEmbeddingH embed_shift_in_H(int m, int n);

}  // namespace vyg
