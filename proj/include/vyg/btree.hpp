#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vyg/errors.hpp"

namespace vyg {

using Pos = std::int64_t;

// A vertex of the complete binary tree: a binary string of length <= kMaxLen.
// Bit i of `bits` holds the i-th digit of the string (i = 0 is the first
// digit), so a prefix test is a single mask-and-compare.
struct Node {
  static constexpr int kMaxLen = 30;

  std::uint32_t bits = 0;
  int len = 0;

  static Node root() { return Node{}; }
  static Node parse(std::string_view s);

  bool is_root() const { return len == 0; }
  int digit(int i) const { return (bits >> i) & 1u; }
  Node child(int d) const;
  Node parent() const;

  std::string to_string() const;
  // Packs (bits, len) into one integer; distinct nodes get distinct values.
  std::uint64_t packed() const {
    return (std::uint64_t(len) << 32) | bits;
  }

  bool operator==(const Node& o) const { return bits == o.bits && len == o.len; }
  bool operator!=(const Node& o) const { return !(*this == o); }
};

enum class Side { Left, Right };

// x <= y in tree order: x is an initial segment of y.
bool is_below(const Node& x, const Node& y);
bool strictly_below(const Node& x, const Node& y);
bool comparable(const Node& x, const Node& y);

// Longest common initial segment.
Node meet(const Node& x, const Node& y);

// The side of y over x: Left when the digit of y following the prefix x is 0.
// Requires x strictly below y.
Side side_above(const Node& x, const Node& y);

// Dictionary order on the underlying strings ("" < "0" < "00" < "01" < "1").
bool lex_less(const Node& a, const Node& b);

// The complete binary tree of all strings of length <= n.
struct TreeOrder {
  int n;

  explicit TreeOrder(int depth);

  std::size_t size() const { return (std::size_t(1) << (n + 1)) - 1; }
  bool contains(const Node& x) const { return x.len <= n; }
  // All nodes in dictionary order (preorder with the 0-child first).
  std::vector<Node> all_nodes() const;
};

// Integer drawing of the tree of depth n on the horizontal axis.  The root
// sits at 0; the children of a node at h with length m sit at h -+ 2^(2n-m).
// All scaled positions are even multiples of 2^(n+1) except the root, so
// distinct nodes land on distinct integers and a unit shift never crosses a
// node position.
struct Embedding {
  int n;

  explicit Embedding(int depth);

  Pos position(const Node& x) const;
  // Every node of the tree with its position, keyed by the node string.
  std::map<std::string, Pos> materialize() const;
};

}  // namespace vyg
