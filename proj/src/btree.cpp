#include "vyg/btree.hpp"

#include <bit>

namespace vyg {

namespace {

std::uint32_t low_mask(int len) {
  return len == 0 ? 0u : (len >= 32 ? ~0u : ((1u << len) - 1u));
}

}  // namespace

Node Node::parse(std::string_view s) {
  if (s.size() > std::size_t(kMaxLen)) {
    throw Error("node string longer than " + std::to_string(kMaxLen) +
                ": \"" + std::string(s) + "\"");
  }
  Node x;
  x.len = int(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      x.bits |= (1u << i);
    } else if (s[i] != '0') {
      throw Error("node string must be over {0,1}: \"" + std::string(s) + "\"");
    }
  }
  return x;
}

Node Node::child(int d) const {
  if (len >= kMaxLen) throw Error("node too deep for a child");
  Node c = *this;
  if (d) c.bits |= (1u << len);
  c.len = len + 1;
  return c;
}

Node Node::parent() const {
  if (len == 0) throw Error("the root has no parent");
  Node p = *this;
  p.len = len - 1;
  p.bits &= low_mask(p.len);
  return p;
}

std::string Node::to_string() const {
  std::string s(std::size_t(len), '0');
  for (int i = 0; i < len; ++i) {
    if (digit(i)) s[std::size_t(i)] = '1';
  }
  return s;
}

bool is_below(const Node& x, const Node& y) {
  return x.len <= y.len && (y.bits & low_mask(x.len)) == x.bits;
}

bool strictly_below(const Node& x, const Node& y) {
  return x.len < y.len && (y.bits & low_mask(x.len)) == x.bits;
}

bool comparable(const Node& x, const Node& y) {
  return is_below(x, y) || is_below(y, x);
}

Node meet(const Node& x, const Node& y) {
  int limit = std::min(x.len, y.len);
  std::uint32_t diff = x.bits ^ y.bits;
  int common = diff == 0 ? limit : std::min(limit, std::countr_zero(diff));
  Node m;
  m.len = common;
  m.bits = x.bits & low_mask(common);
  return m;
}

Side side_above(const Node& x, const Node& y) {
  if (!strictly_below(x, y)) {
    throw Error("side_above requires the first node strictly below the second");
  }
  return y.digit(x.len) ? Side::Right : Side::Left;
}

bool lex_less(const Node& a, const Node& b) {
  int limit = std::min(a.len, b.len);
  for (int i = 0; i < limit; ++i) {
    int da = a.digit(i), db = b.digit(i);
    if (da != db) return da < db;
  }
  return a.len < b.len;
}

TreeOrder::TreeOrder(int depth) : n(depth) {
  if (n < 0 || n > Node::kMaxLen) {
    throw Error("tree depth out of range: " + std::to_string(n));
  }
}

std::vector<Node> TreeOrder::all_nodes() const {
  std::vector<Node> out;
  out.reserve(size());
  // Preorder with the 0-child first is exactly dictionary order.
  std::vector<Node> stack{Node::root()};
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    out.push_back(x);
    if (x.len < n) {
      stack.push_back(x.child(1));
      stack.push_back(x.child(0));
    }
  }
  return out;
}

Embedding::Embedding(int depth) : n(depth) {
  if (n < 1 || 2 * n + 1 >= 63) {
    throw Error("embedding depth out of range: " + std::to_string(n));
  }
}

Pos Embedding::position(const Node& x) const {
  if (x.len > n) {
    throw Error("node \"" + x.to_string() + "\" lies below depth " +
                std::to_string(n));
  }
  Pos h = 0;
  for (int i = 0; i < x.len; ++i) {
    Pos step = Pos(1) << (2 * n - i);
    h += x.digit(i) ? step : -step;
  }
  return h;
}

std::map<std::string, Pos> Embedding::materialize() const {
  std::map<std::string, Pos> out;
  for (const Node& x : TreeOrder(n).all_nodes()) {
    out.emplace(x.to_string(), position(x));
  }
  return out;
}

}  // namespace vyg
