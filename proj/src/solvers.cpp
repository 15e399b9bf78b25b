#include "vyg/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "vyg/errors.hpp"

namespace vyg {
namespace detail {

RawGraph raw_from_graph(const Graph& g) {
  RawGraph r;
  r.n = g.size();
  r.adj.resize(r.n);
  for (int v = 0; v < r.n; ++v) {
    auto nb = g.neighbors(v);
    r.adj[v].assign(nb.begin(), nb.end());
  }
  return r;
}

RawGraph raw_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  RawGraph r;
  r.n = n;
  r.adj.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw Error("raw_from_edges: bad edge");
    r.adj[u].push_back(v);
    r.adj[v].push_back(u);
  }
  for (auto& a : r.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return r;
}

namespace {

bool raw_has_edge(const RawGraph& g, int u, int v) {
  const auto& a = g.adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t raw_edge_count(const RawGraph& g) {
  std::size_t d = 0;
  for (const auto& a : g.adj) d += a.size();
  return d / 2;
}

// Colors 1/2 on success; isolated vertices get 1.
std::optional<std::vector<int>> two_color(const RawGraph& g) {
  std::vector<int> col(g.n, 0);
  std::deque<int> q;
  for (int s = 0; s < g.n; ++s) {
    if (col[s] != 0) continue;
    col[s] = 1;
    q.clear();
    q.push_back(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : g.adj[v]) {
        if (col[u] == 0) {
          col[u] = 3 - col[v];
          q.push_back(u);
        } else if (col[u] == col[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return col;
}

// Deterministic maximal clique: sweep vertices by degree descending.
std::vector<int> greedy_clique(const RawGraph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.adj[a].size() != g.adj[b].size())
      return g.adj[a].size() > g.adj[b].size();
    return a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int c : clique) {
      if (!raw_has_edge(g, v, c)) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(v);
  }
  return clique;
}

struct GreedyResult {
  int used = 0;
  std::vector<int> colors;
};

// Saturation-first greedy; exact on nothing but a sound upper bound.
GreedyResult dsatur_greedy(const RawGraph& g) {
  GreedyResult res;
  res.colors.assign(g.n, 0);
  std::vector<std::vector<std::uint16_t>> ncnt(g.n);
  std::vector<int> sat(g.n, 0);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (res.colors[v] != 0) continue;
      if (best == -1 || sat[v] > sat[best] ||
          (sat[v] == sat[best] && g.adj[v].size() > g.adj[best].size()))
        best = v;
    }
    auto& cnt = ncnt[best];
    int c = 1;
    while (c < static_cast<int>(cnt.size()) && cnt[c] != 0) ++c;
    res.colors[best] = c;
    res.used = std::max(res.used, c);
    for (int u : g.adj[best]) {
      if (res.colors[u] != 0) continue;
      auto& uc = ncnt[u];
      if (static_cast<int>(uc.size()) <= c) uc.resize(c + 1, 0);
      if (uc[c]++ == 0) ++sat[u];
    }
  }
  return res;
}

struct ReductionEvent {
  enum Kind { kPeeled, kCopied } kind;
  int u;
  int v;  // dominator for kCopied
};

// Branch and bound k-coloring over local indices 0..s-1.
class BranchSearch {
 public:
  BranchSearch(std::vector<std::vector<int>> adj, int k, std::uint64_t& nodes)
      : adj_(std::move(adj)),
        k_(k),
        s_(static_cast<int>(adj_.size())),
        nodes_(nodes) {
    col_.assign(s_, 0);
    sat_.assign(s_, 0);
    cnt_.assign(static_cast<std::size_t>(s_) * (k_ + 2), 0);
  }

  std::optional<std::vector<int>> run() {
    if (rec(0, 0)) return col_;
    return std::nullopt;
  }

 private:
  bool rec(int assigned, int max_used) {
    ++nodes_;
    if (assigned == s_) return true;
    int v = -1;
    for (int u = 0; u < s_; ++u) {
      if (col_[u] != 0) continue;
      if (v == -1 || sat_[u] > sat_[v] ||
          (sat_[u] == sat_[v] && adj_[u].size() > adj_[v].size()))
        v = u;
    }
    if (sat_[v] >= k_) return false;
    int limit = std::min(k_, max_used + 1);
    auto* vc = &cnt_[static_cast<std::size_t>(v) * (k_ + 2)];
    for (int c = 1; c <= limit; ++c) {
      if (vc[c] != 0) continue;
      col_[v] = c;
      for (int u : adj_[v]) {
        auto& uc = cnt_[static_cast<std::size_t>(u) * (k_ + 2) + c];
        if (uc++ == 0) ++sat_[u];
      }
      if (rec(assigned + 1, std::max(max_used, c))) return true;
      for (int u : adj_[v]) {
        auto& uc = cnt_[static_cast<std::size_t>(u) * (k_ + 2) + c];
        if (--uc == 0) --sat_[u];
      }
      col_[v] = 0;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  int k_;
  int s_;
  std::uint64_t& nodes_;
  std::vector<int> col_;
  std::vector<int> sat_;
  std::vector<std::uint16_t> cnt_;
};

using Bitrow = std::vector<std::uint64_t>;

bool bit_get(const Bitrow& r, int i) { return (r[i >> 6] >> (i & 63)) & 1; }
void bit_set(Bitrow& r, int i) { r[i >> 6] |= std::uint64_t(1) << (i & 63); }
void bit_clear(Bitrow& r, int i) { r[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

bool row_subset(const Bitrow& a, const Bitrow& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> k_colorable(const RawGraph& g, int k,
                                            const SolverConfig& cfg,
                                            std::uint64_t& nodes) {
  if (g.n == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  if (k == 1) {
    if (raw_edge_count(g) != 0) return std::nullopt;
    return std::vector<int>(g.n, 1);
  }
  if (k >= g.n) {
    std::vector<int> col(g.n);
    std::iota(col.begin(), col.end(), 1);
    return col;
  }
  if (auto bip = two_color(g)) return bip;
  if (k == 2) return std::nullopt;

  // k >= 3.  Peel low-degree vertices and drop dominated ones until nothing
  // changes; only a surviving kernel is searched.
  std::vector<char> alive(g.n, 1);
  std::vector<int> deg(g.n);
  std::vector<ReductionEvent> events;
  std::deque<int> peel;
  for (int v = 0; v < g.n; ++v) {
    deg[v] = static_cast<int>(g.adj[v].size());
    if (deg[v] < k) peel.push_back(v);
  }
  auto drain_peel = [&] {
    while (!peel.empty()) {
      int v = peel.front();
      peel.pop_front();
      if (!alive[v]) continue;
      alive[v] = 0;
      events.push_back({ReductionEvent::kPeeled, v, -1});
      for (int u : g.adj[v]) {
        if (alive[u] && --deg[u] < k) peel.push_back(u);
      }
    }
  };
  drain_peel();
  constexpr int kDominationLimit = 20000;
  for (;;) {
    std::vector<int> surv;
    for (int v = 0; v < g.n; ++v)
      if (alive[v]) surv.push_back(v);
    int s = static_cast<int>(surv.size());
    if (s == 0 || s > kDominationLimit) break;
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < s; ++i) local[surv[i]] = i;
    std::size_t words = (s + 63) / 64;
    std::vector<Bitrow> row(s, Bitrow(words, 0));
    for (int i = 0; i < s; ++i)
      for (int u : g.adj[surv[i]])
        if (alive[u]) bit_set(row[i], local[u]);
    std::vector<char> lal(s, 1);
    bool changed = false;
    for (int i = 0; i < s; ++i) {
      if (!lal[i]) continue;
      for (int j = 0; j < s; ++j) {
        if (j == i || !lal[j] || bit_get(row[i], j)) continue;
        if (!row_subset(row[i], row[j])) continue;
        lal[i] = 0;
        alive[surv[i]] = 0;
        events.push_back({ReductionEvent::kCopied, surv[i], surv[j]});
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t bits = row[i][w];
          while (bits) {
            int t = static_cast<int>(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            bit_clear(row[t], i);
            if (--deg[surv[t]] < k) peel.push_back(surv[t]);
          }
        }
        changed = true;
        break;
      }
    }
    if (!changed) break;
    drain_peel();
  }

  std::vector<int> kernel;
  for (int v = 0; v < g.n; ++v)
    if (alive[v]) kernel.push_back(v);
  std::vector<int> colors(g.n, 0);
  if (!kernel.empty()) {
    int s = static_cast<int>(kernel.size());
    if (s > cfg.size_cap)
      throw SizeCapError("k-coloring search", s, cfg.size_cap);
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < s; ++i) local[kernel[i]] = i;
    std::vector<std::vector<int>> kadj(s);
    for (int i = 0; i < s; ++i)
      for (int u : g.adj[kernel[i]])
        if (local[u] >= 0) kadj[i].push_back(local[u]);
    BranchSearch search(std::move(kadj), k, nodes);
    auto found = search.run();
    if (!found) return std::nullopt;
    for (int i = 0; i < s; ++i) colors[kernel[i]] = (*found)[i];
  }

  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (it->kind == ReductionEvent::kCopied) {
      colors[it->u] = colors[it->v];
    } else {
      std::vector<char> used(k + 1, 0);
      for (int u : g.adj[it->u])
        if (colors[u] > 0 && colors[u] <= k) used[colors[u]] = 1;
      int c = 1;
      while (c <= k && used[c]) ++c;
      if (c > k) throw Error("peel reconstruction ran out of colors");
      colors[it->u] = c;
    }
  }
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (u > v && colors[u] == colors[v])
        throw Error("reconstructed coloring is not proper");
  return colors;
}

RawResult chromatic_of(const RawGraph& g, const SolverConfig& cfg) {
  RawResult res;
  if (g.n == 0) return res;
  if (raw_edge_count(g) == 0) {
    res.value = 1;
    res.colors.assign(g.n, 1);
    return res;
  }
  if (auto bip = two_color(g)) {
    res.value = 2;
    res.colors = std::move(*bip);
    return res;
  }
  int lb = std::max<int>(3, static_cast<int>(greedy_clique(g).size()));
  GreedyResult greedy = dsatur_greedy(g);
  if (greedy.used == lb) {
    res.value = lb;
    res.colors = std::move(greedy.colors);
    return res;
  }
  for (int k = lb; k < greedy.used; ++k) {
    if (auto col = k_colorable(g, k, cfg, res.nodes)) {
      res.value = k;
      res.colors = std::move(*col);
      return res;
    }
  }
  res.value = greedy.used;
  res.colors = std::move(greedy.colors);
  return res;
}

}  // namespace detail

namespace {

Coloring coloring_from_vector(const std::vector<int>& colors) {
  Coloring c;
  for (int v = 0; v < static_cast<int>(colors.size()); ++v)
    c.set(v, colors[v]);
  return c;
}

}  // namespace

SolveResult chromatic_number(const Graph& g, const SolverConfig& cfg) {
  detail::RawResult raw = detail::chromatic_of(detail::raw_from_graph(g), cfg);
  SolveResult res;
  res.value = raw.value;
  res.nodes_explored = raw.nodes;
  res.coloring = coloring_from_vector(raw.colors);
  return res;
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k,
                                       const SolverConfig& cfg) {
  std::uint64_t nodes = 0;
  auto col = detail::k_colorable(detail::raw_from_graph(g), k, cfg, nodes);
  if (!col) return std::nullopt;
  return coloring_from_vector(*col);
}

namespace {

detail::RawGraph raw_from_mask(const std::vector<std::uint32_t>& adjm,
                               std::uint32_t mask,
                               std::vector<int>* members_out) {
  std::vector<int> members;
  for (std::uint32_t m = mask; m; m &= m - 1)
    members.push_back(std::countr_zero(m));
  detail::RawGraph r;
  r.n = static_cast<int>(members.size());
  r.adj.resize(r.n);
  for (int i = 0; i < r.n; ++i) {
    std::uint32_t nb = adjm[members[i]] & mask;
    for (std::uint32_t m = nb; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int j = static_cast<int>(
          std::lower_bound(members.begin(), members.end(), u) -
          members.begin());
      r.adj[i].push_back(j);
    }
  }
  if (members_out) *members_out = std::move(members);
  return r;
}

}  // namespace

SolveResult pchr_exact(const Graph& g, const SolverConfig& cfg) {
  const int n = g.size();
  SolveResult res;
  if (n == 0) return res;
  constexpr int kDpCap = 22;
  if (n > kDpCap) throw SizeCapError("path-chromatic dynamic program", n, kDpCap);

  std::vector<std::uint32_t> adjm(n, 0);
  for (auto [u, v] : g.edges()) {
    adjm[u] |= std::uint32_t(1) << v;
    adjm[v] |= std::uint32_t(1) << u;
  }
  const std::uint32_t full =
      (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);

  std::unordered_map<std::uint32_t, std::int8_t> chi_memo;
  auto bag_chi = [&](std::uint32_t bag) -> int {
    auto it = chi_memo.find(bag);
    if (it != chi_memo.end()) return it->second;
    int v = detail::chromatic_of(raw_from_mask(adjm, bag, nullptr), cfg).value;
    chi_memo.emplace(bag, static_cast<std::int8_t>(v));
    return v;
  };

  // f[S] = best achievable maximum bag chromatic number when S is the set of
  // vertices still to introduce; choice[S] is the tie-broken next pick.
  std::vector<std::int8_t> f(std::size_t(1) << n, 0);
  std::vector<std::int8_t> choice(std::size_t(1) << n, -1);
  for (std::uint32_t S = 1; S <= full; ++S) {
    std::uint32_t boundary = 0;
    for (std::uint32_t m = S; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if ((adjm[u] & ~S) != 0) boundary |= std::uint32_t(1) << u;
    }
    int best = 127, bestv = -1;
    for (std::uint32_t m = S; m; m &= m - 1) {
      int v = std::countr_zero(m);
      std::uint32_t bit = std::uint32_t(1) << v;
      std::uint32_t bag = boundary | bit | (adjm[v] & S);
      int val = std::max<int>(f[S ^ bit], bag_chi(bag));
      ++res.nodes_explored;
      if (val < best) {
        best = val;
        bestv = v;
      }
    }
    f[S] = static_cast<std::int8_t>(best);
    choice[S] = static_cast<std::int8_t>(bestv);
  }
  res.value = f[full];

  // The recurrence introduces choice[S] while V minus S is already placed, so
  // reading the choices forward and reversing yields an order whose minimal
  // intervals realize the optimum.
  std::vector<int> picks;
  for (std::uint32_t S = full; S;) {
    int v = choice[S];
    picks.push_back(v);
    S ^= std::uint32_t(1) << v;
  }
  res.intro_order.assign(picks.rbegin(), picks.rend());

  std::vector<int> intro(n, 0);
  for (int t = 0; t < n; ++t) intro[res.intro_order[t]] = t + 1;
  res.decomposition.intervals.resize(n);
  for (int v = 0; v < n; ++v) {
    int right = intro[v];
    for (std::uint32_t m = adjm[v]; m; m &= m - 1)
      right = std::max(right, intro[std::countr_zero(m)]);
    res.decomposition.intervals[v] = Interval{intro[v], right};
  }
  for (int t = 1; t <= n; ++t) {
    std::uint32_t bag = 0;
    for (int v = 0; v < n; ++v) {
      const auto& iv = *res.decomposition.intervals[v];
      if (iv.a <= t && t <= iv.b) bag |= std::uint32_t(1) << v;
    }
    std::vector<int> members;
    auto raw = raw_from_mask(adjm, bag, &members);
    auto colored = detail::chromatic_of(raw, cfg);
    Coloring c;
    for (int i = 0; i < raw.n; ++i) c.set(members[i], colored.colors[i]);
    res.bag_colorings.push_back(std::move(c));
  }
  return res;
}

namespace {

// Small standalone exact coloring used only by the permutation cross-check.
// Assigns in order; fresh colors capped at one past the running maximum.
bool brute_rec(const std::vector<std::uint32_t>& adjm,
               const std::vector<int>& verts, std::vector<int>& col, int i,
               int k, int maxu) {
  if (i == static_cast<int>(verts.size())) return true;
  int limit = std::min(k, maxu + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int j = 0; j < i; ++j) {
      if (col[j] == c && (adjm[verts[i]] >> verts[j] & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      col[i] = c;
      if (brute_rec(adjm, verts, col, i + 1, k, std::max(maxu, c)))
        return true;
    }
  }
  return false;
}

bool brute_colorable(const std::vector<std::uint32_t>& adjm,
                     const std::vector<int>& verts, int k) {
  std::vector<int> col(verts.size(), 0);
  return brute_rec(adjm, verts, col, 0, k, 0);
}

int brute_chi(const std::vector<std::uint32_t>& adjm, std::uint32_t mask,
              std::unordered_map<std::uint32_t, int>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<int> verts;
  for (std::uint32_t m = mask; m; m &= m - 1)
    verts.push_back(std::countr_zero(m));
  int chi = 0;
  if (!verts.empty()) {
    for (int k = 1;; ++k) {
      if (brute_colorable(adjm, verts, k)) {
        chi = k;
        break;
      }
    }
  }
  memo.emplace(mask, chi);
  return chi;
}

}  // namespace

int pchr_brute_permutations(const Graph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  constexpr int kBruteCap = 9;
  if (n > kBruteCap)
    throw SizeCapError("path-chromatic permutation sweep", n, kBruteCap);

  std::vector<std::uint32_t> adjm(n, 0);
  for (auto [u, v] : g.edges()) {
    adjm[u] |= std::uint32_t(1) << v;
    adjm[v] |= std::uint32_t(1) << u;
  }
  std::unordered_map<std::uint32_t, int> memo;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n + 1;
  std::vector<int> pos(n), right(n);
  do {
    for (int t = 0; t < n; ++t) pos[perm[t]] = t;
    for (int v = 0; v < n; ++v) {
      right[v] = pos[v];
      for (std::uint32_t m = adjm[v]; m; m &= m - 1)
        right[v] = std::max(right[v], pos[std::countr_zero(m)]);
    }
    int worst = 0;
    for (int t = 0; t < n && worst < best; ++t) {
      std::uint32_t bag = 0;
      for (int v = 0; v < n; ++v)
        if (pos[v] <= t && t <= right[v]) bag |= std::uint32_t(1) << v;
      worst = std::max(worst, brute_chi(adjm, bag, memo));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace vyg
