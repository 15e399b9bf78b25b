#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vyg/btree.hpp"
#include "vyg/decomp.hpp"
#include "vyg/graphs.hpp"

namespace vyg {

// Shape of an ordered pair of Vees, read off where the second low point sits
// relative to the first Vee.  Pairs fitting no class are Other.
enum class PatternClass { Q1, Q2, Q3, Q4, Q5, Q6, Q7, Other };

// How two intervals with four distinct endpoints relate: overlap to the
// right/left, disjoint to the right/left, second-inside-first,
// first-inside-second.
enum class RelationLabel { OMR, OML, DMR, DML, ISF, IFS };

const char* to_string(PatternClass c);
const char* to_string(RelationLabel r);

// Q1: the second low point is the first right end; Q2: the first left end.
// Q3/Q5: it hangs strictly under the first right end, on its right/left;
// Q4/Q6: strictly under the first left end, on its left/right.  Q7: the low
// points are incomparable with the first on the left of their meet.
PatternClass classify_pair(const Vee& v1, const Vee& v2);

// Throws on shared endpoints or degenerate intervals.
RelationLabel interval_relation(const Interval& i1, const Interval& i2);

// The relation each class must produce under the drawing.
const std::map<PatternClass, RelationLabel>& expected_relations();

struct PropertyReport {
  // Relations actually seen per class, over all ordered vertex pairs.
  std::map<PatternClass, std::set<RelationLabel>> observed;
  struct Violation {
    int v1 = 0;
    int v2 = 0;
    std::string reason;
  };
  // Capped sample of offending pairs; the count below is exact.
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  bool conformant = false;
};

// Classifies every ordered pair of an all-Vee graph and compares the
// interval relation against the expected one.  Conformant when no pair has
// coinciding endpoints and every observed relation is the expected one.
PropertyReport property_report(const Graph& vee_graph,
                               const PathDecomposition& d);

// A prefix-closed set of tree nodes in dictionary order.
struct BinaryTree {
  std::vector<Node> nodes;

  static BinaryTree complete(int k);
  static BinaryTree from_nodes(std::vector<Node> nodes);
  int index_of(const Node& x) const;  // -1 when absent
};

// Image of each source node, aligned with source.nodes.
using StrongCopyMap = std::vector<Node>;

// A strong copy preserves order both ways and the branching side of every
// comparable pair; with a prefix-closed source this forces meets and
// left-right orientation too.
bool is_strong_copy(const BinaryTree& source, const StrongCopyMap& image,
                    int n);

// All strong copies of `source` in the depth-n tree, ordered by the image
// of the source root, then recursively.  Guarded by a cap on |source|.
std::vector<StrongCopyMap> enumerate_strong_copies(const BinaryTree& source,
                                                   int n,
                                                   std::size_t source_cap = 7);

// Searches the strong copies of the complete depth-p tree in the depth-n
// tree for one all of whose inner copies of `source` get the same color.
std::optional<StrongCopyMap> find_monochromatic_copy(
    int n, int p, const BinaryTree& source,
    const std::function<int(const StrongCopyMap&)>& coloring);

}  // namespace vyg
