#include "vyg/decomp.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>
#include <utility>

#include "vyg/errors.hpp"
#include "vyg/solvers.hpp"

namespace vyg {

namespace {

// Union-find with bipartition parities and rollback.  No path compression so
// undo is exact; union by size keeps find logarithmic.
class ParityDsu {
 public:
  explicit ParityDsu(int n) : parent_(n), size_(n, 1), par_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) const {
    int p = 0;
    while (parent_[x] != x) {
      p ^= par_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  // Joins with parity one (an edge); false when this closes an odd cycle.
  bool join(int a, int b) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == 1;
    if (size_[ra] < size_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    par_[rb] = static_cast<unsigned char>(pa ^ pb ^ 1);
    size_[ra] += size_[rb];
    trail_.push_back(rb);
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void rollback(std::size_t m) {
    while (trail_.size() > m) {
      int c = trail_.back();
      trail_.pop_back();
      size_[parent_[c]] -= size_[c];
      parent_[c] = c;
      par_[c] = 0;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<unsigned char> par_;
  std::vector<int> trail_;
};

// Marks every sweep point whose bag is not bipartite.  An edge is applied at
// the deepest segment-tree node it spans, so along any root-to-leaf path
// exactly the edges alive at that point have been joined.
void sweep_rec(int lo, int hi, std::vector<int> es, const std::vector<int>& le,
               const std::vector<int>& re,
               const std::vector<std::pair<int, int>>& edges, ParityDsu& dsu,
               std::vector<char>& nonbip) {
  std::size_t m0 = dsu.mark();
  bool conflict = false;
  int mid = lo + (hi - lo) / 2;
  std::vector<int> left, right;
  for (int e : es) {
    if (le[e] <= lo && re[e] >= hi - 1) {
      if (!conflict && !dsu.join(edges[e].first, edges[e].second))
        conflict = true;
    } else {
      if (le[e] < mid) left.push_back(e);
      if (re[e] >= mid) right.push_back(e);
    }
  }
  es = std::vector<int>();
  if (conflict) {
    std::fill(nonbip.begin() + lo, nonbip.begin() + hi, 1);
  } else if (hi - lo > 1) {
    sweep_rec(lo, mid, std::move(left), le, re, edges, dsu, nonbip);
    sweep_rec(mid, hi, std::move(right), le, re, edges, dsu, nonbip);
  }
  dsu.rollback(m0);
}

struct PathSweep {
  std::vector<Pos> points;  // sorted distinct endpoints
  std::vector<int> lv, rv;  // per-vertex point index range
  std::vector<int> le, re;  // per-edge point index range
};

PathSweep build_sweep(const Graph& g, const PathDecomposition& d) {
  const int n = g.size();
  if (static_cast<int>(d.intervals.size()) != n)
    throw Error("path decomposition does not match the graph");
  PathSweep s;
  s.points.reserve(2 * n);
  for (int v = 0; v < n; ++v) {
    if (!d.intervals[v]) throw Error("vertex without an interval");
    if (d.intervals[v]->a > d.intervals[v]->b)
      throw Error("vertex with an empty interval");
    s.points.push_back(d.intervals[v]->a);
    s.points.push_back(d.intervals[v]->b);
  }
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()),
                 s.points.end());
  auto idx = [&](Pos p) {
    return static_cast<int>(
        std::lower_bound(s.points.begin(), s.points.end(), p) -
        s.points.begin());
  };
  s.lv.resize(n);
  s.rv.resize(n);
  for (int v = 0; v < n; ++v) {
    s.lv[v] = idx(d.intervals[v]->a);
    s.rv[v] = idx(d.intervals[v]->b);
  }
  const auto& edges = g.edges();
  s.le.resize(edges.size());
  s.re.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    s.le[e] = std::max(s.lv[edges[e].first], s.lv[edges[e].second]);
    s.re[e] = std::min(s.rv[edges[e].first], s.rv[edges[e].second]);
    if (s.le[e] > s.re[e]) throw Error("edge with disjoint intervals");
  }
  return s;
}

// Exact chromatic number of the bag at point index t; `stamp`/`local` are
// scratch arrays of size |V| owned by the caller (one set per thread).
int exact_bag_chi_at(const Graph& g, const PathSweep& s, int t,
                     const SolverConfig& cfg, std::vector<int>& stamp,
                     std::vector<int>& local) {
  std::vector<int> members;
  for (int v = 0; v < g.size(); ++v)
    if (s.lv[v] <= t && t <= s.rv[v]) members.push_back(v);
  detail::RawGraph raw;
  raw.n = static_cast<int>(members.size());
  raw.adj.resize(raw.n);
  for (int i = 0; i < raw.n; ++i) {
    stamp[members[i]] = t;
    local[members[i]] = i;
  }
  for (int i = 0; i < raw.n; ++i)
    for (int u : g.neighbors(members[i]))
      if (stamp[u] == t) raw.adj[i].push_back(local[u]);
  for (auto& a : raw.adj) std::sort(a.begin(), a.end());
  return detail::chromatic_of(raw, cfg).value;
}

// Runs fn(worker, i) for i in [0, count) across `jobs` threads; exceptions
// are rethrown in worker order so the outcome does not depend on scheduling.
void parallel_for(int count, int jobs,
                  const std::function<void(int, int)>& fn) {
  if (count == 0) return;
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::vector<std::exception_ptr> errs(jobs);
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += jobs) fn(w, i);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

ValidityReport verify_path_decomposition(const Graph& g,
                                         const PathDecomposition& d) {
  const int n = g.size();
  if (static_cast<int>(d.intervals.size()) != n)
    throw Error("path decomposition does not match the graph");
  ValidityReport rep;
  std::vector<char> ok(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!d.intervals[v]) {
      rep.uncovered_vertices.push_back(v);
    } else if (d.intervals[v]->a > d.intervals[v]->b) {
      rep.bad_intervals.push_back(v);
    } else {
      ok[v] = 1;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (!ok[u] || !ok[v]) continue;
    Pos lo = std::max(d.intervals[u]->a, d.intervals[v]->a);
    Pos hi = std::min(d.intervals[u]->b, d.intervals[v]->b);
    if (lo > hi) rep.uncovered_edges.emplace_back(u, v);
  }
  rep.valid = rep.uncovered_vertices.empty() && rep.uncovered_edges.empty() &&
              rep.bad_intervals.empty();
  return rep;
}

ValidityReport verify_tree_decomposition(const Graph& g,
                                         const TreeDecomposition& d) {
  const int k = static_cast<int>(d.host_labels.size());
  if (static_cast<int>(d.bags.size()) != k)
    throw Error("bag count does not match the host");
  {
    std::vector<std::string> labels = d.host_labels;
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw Error("duplicate host labels");
  }
  std::vector<std::vector<int>> hadj(k);
  {
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : d.host_edges) {
      if (a < 0 || b < 0 || a >= k || b >= k || a == b)
        throw Error("host edge out of range");
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (static_cast<int>(es.size()) != std::max(0, k - 1))
      throw Error("host is not a tree");
    for (auto [a, b] : es) {
      hadj[a].push_back(b);
      hadj[b].push_back(a);
    }
    if (k > 0) {
      std::vector<char> seen(k, 0);
      std::deque<int> q{0};
      seen[0] = 1;
      int cnt = 1;
      while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int u : hadj[t])
          if (!seen[u]) {
            seen[u] = 1;
            ++cnt;
            q.push_back(u);
          }
      }
      if (cnt != k) throw Error("host is not a tree");
    }
  }

  const int n = g.size();
  std::vector<std::vector<int>> trace(n);
  for (int b = 0; b < k; ++b) {
    std::vector<int> bag = d.bags[b];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    for (int v : bag) {
      if (v < 0 || v >= n) throw Error("bag references an unknown vertex");
      trace[v].push_back(b);
    }
  }

  ValidityReport rep;
  for (int v = 0; v < n; ++v)
    if (trace[v].empty()) rep.uncovered_vertices.push_back(v);
  for (auto [u, v] : g.edges()) {
    bool meet = false;
    std::size_t i = 0, j = 0;
    while (i < trace[u].size() && j < trace[v].size()) {
      if (trace[u][i] == trace[v][j]) {
        meet = true;
        break;
      }
      if (trace[u][i] < trace[v][j])
        ++i;
      else
        ++j;
    }
    if (!meet) rep.uncovered_edges.emplace_back(u, v);
  }
  {
    std::vector<int> stamp(k, -1);
    std::deque<int> q;
    for (int v = 0; v < n; ++v) {
      if (trace[v].size() <= 1) continue;
      for (int t : trace[v]) stamp[t] = v;
      q.clear();
      q.push_back(trace[v][0]);
      stamp[trace[v][0]] = ~v;
      std::size_t cnt = 1;
      while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int u : hadj[t]) {
          if (stamp[u] == v) {
            stamp[u] = ~v;
            ++cnt;
            q.push_back(u);
          }
        }
      }
      if (cnt != trace[v].size()) rep.broken_traces.push_back(v);
    }
  }
  rep.valid = rep.uncovered_vertices.empty() && rep.uncovered_edges.empty() &&
              rep.broken_traces.empty();
  return rep;
}

BagChromaticDetail decomposition_chromatic_detail(const Graph& g,
                                                  const PathDecomposition& d,
                                                  const SolverConfig& cfg) {
  BagChromaticDetail out;
  PathSweep s = build_sweep(g, d);
  const int t = static_cast<int>(s.points.size());
  if (t == 0) return out;

  std::vector<int> cover(t + 1, 0), ecnt(t + 1, 0);
  for (int v = 0; v < g.size(); ++v) {
    ++cover[s.lv[v]];
    --cover[s.rv[v] + 1];
  }
  for (std::size_t e = 0; e < s.le.size(); ++e) {
    ++ecnt[s.le[e]];
    --ecnt[s.re[e] + 1];
  }
  std::partial_sum(cover.begin(), cover.end(), cover.begin());
  std::partial_sum(ecnt.begin(), ecnt.end(), ecnt.begin());

  std::vector<char> nonbip(t, 0);
  {
    ParityDsu dsu(g.size());
    std::vector<int> all(s.le.size());
    std::iota(all.begin(), all.end(), 0);
    sweep_rec(0, t, std::move(all), s.le, s.re, g.edges(), dsu, nonbip);
  }

  std::vector<int> flagged;
  for (int i = 0; i < t; ++i)
    if (nonbip[i]) flagged.push_back(i);
  std::vector<int> flagged_chi(flagged.size(), 0);
  {
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::vector<int>> stamps(jobs, std::vector<int>(g.size(), -1));
    std::vector<std::vector<int>> locals(jobs, std::vector<int>(g.size(), -1));
    parallel_for(static_cast<int>(flagged.size()), jobs, [&](int w, int i) {
      flagged_chi[i] =
          exact_bag_chi_at(g, s, flagged[i], cfg, stamps[w], locals[w]);
    });
  }

  int best = 0, witness = 0;
  std::size_t fi = 0;
  for (int i = 0; i < t; ++i) {
    int chi;
    if (cover[i] == 0)
      chi = 0;
    else if (ecnt[i] == 0)
      chi = 1;
    else if (!nonbip[i])
      chi = 2;
    else
      chi = flagged_chi[fi++];
    if (chi > best) {
      best = chi;
      witness = i;
    }
  }
  out.value = best;
  out.witness_position = s.points[witness];
  out.witness_bag = witness;
  return out;
}

BagChromaticDetail decomposition_chromatic_detail(const Graph& g,
                                                  const TreeDecomposition& d,
                                                  const SolverConfig& cfg) {
  BagChromaticDetail out;
  const int k = static_cast<int>(d.bags.size());
  if (static_cast<int>(d.host_labels.size()) != k)
    throw Error("bag count does not match the host");
  if (k == 0) return out;
  const int n = g.size();
  int jobs = std::max(1, cfg.jobs);
  std::vector<int> chis(k, 0);
  std::vector<std::vector<int>> stamps(jobs, std::vector<int>(n, -1));
  std::vector<std::vector<int>> locals(jobs, std::vector<int>(n, -1));
  parallel_for(k, jobs, [&](int w, int b) {
    auto& stamp = stamps[w];
    auto& local = locals[w];
    std::vector<int> members = d.bags[b];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    detail::RawGraph raw;
    raw.n = static_cast<int>(members.size());
    raw.adj.resize(raw.n);
    for (int i = 0; i < raw.n; ++i) {
      int v = members[i];
      if (v < 0 || v >= n) throw Error("bag references an unknown vertex");
      stamp[v] = b;
      local[v] = i;
    }
    for (int i = 0; i < raw.n; ++i)
      for (int u : g.neighbors(members[i]))
        if (stamp[u] == b) raw.adj[i].push_back(local[u]);
    for (auto& a : raw.adj) std::sort(a.begin(), a.end());
    chis[b] = detail::chromatic_of(raw, cfg).value;
  });
  out.witness_bag = 0;
  for (int b = 0; b < k; ++b) {
    if (chis[b] > out.value) {
      out.value = chis[b];
      out.witness_bag = b;
    }
  }
  return out;
}

int decomposition_chromatic(const Graph& g, const PathDecomposition& d,
                            const SolverConfig& cfg) {
  return decomposition_chromatic_detail(g, d, cfg).value;
}

int decomposition_chromatic(const Graph& g, const TreeDecomposition& d,
                            const SolverConfig& cfg) {
  return decomposition_chromatic_detail(g, d, cfg).value;
}

int decomposition_width(const PathDecomposition& d) {
  std::vector<Pos> points;
  for (const auto& iv : d.intervals) {
    if (!iv || iv->a > iv->b) continue;
    points.push_back(iv->a);
    points.push_back(iv->b);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return -1;
  std::vector<int> cover(points.size() + 1, 0);
  for (const auto& iv : d.intervals) {
    if (!iv || iv->a > iv->b) continue;
    auto lo = std::lower_bound(points.begin(), points.end(), iv->a);
    auto hi = std::lower_bound(points.begin(), points.end(), iv->b);
    ++cover[lo - points.begin()];
    --cover[hi - points.begin() + 1];
  }
  int best = 0, run = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    run += cover[i];
    best = std::max(best, run);
  }
  return best - 1;
}

int decomposition_width(const TreeDecomposition& d) {
  int best = -1;
  for (const auto& bag : d.bags)
    best = std::max(best, static_cast<int>(bag.size()) - 1);
  return best;
}

PathDecomposition normalize_path(const Graph& g, const PathDecomposition& d) {
  const int n = g.size();
  if (static_cast<int>(d.intervals.size()) != n)
    throw Error("path decomposition does not match the graph");
  struct Event {
    Pos pos;
    int side;  // 0 = left endpoint, 1 = right endpoint
    int v;
  };
  std::vector<Event> ev;
  ev.reserve(2 * n);
  for (int v = 0; v < n; ++v) {
    if (!d.intervals[v]) throw Error("vertex without an interval");
    if (d.intervals[v]->a > d.intervals[v]->b)
      throw Error("vertex with an empty interval");
    ev.push_back({d.intervals[v]->a, 0, v});
    ev.push_back({d.intervals[v]->b, 1, v});
  }
  std::sort(ev.begin(), ev.end(), [&](const Event& x, const Event& y) {
    if (x.pos != y.pos) return x.pos < y.pos;
    if (x.side != y.side) return x.side < y.side;
    return g.key(x.v) < g.key(y.v);
  });
  PathDecomposition out;
  out.intervals.assign(n, std::nullopt);
  std::vector<Pos> left(n, 0);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].side == 0)
      left[ev[i].v] = static_cast<Pos>(i);
    else
      out.intervals[ev[i].v] = Interval{left[ev[i].v], static_cast<Pos>(i)};
  }
  return out;
}

TreeDecomposition path_as_tree(const Graph& g, const PathDecomposition& d) {
  PathSweep s = build_sweep(g, d);
  const int t = static_cast<int>(s.points.size());
  std::vector<std::vector<int>> bags(t);
  for (int v = 0; v < g.size(); ++v)
    for (int i = s.lv[v]; i <= s.rv[v]; ++i) bags[i].push_back(v);
  TreeDecomposition out;
  for (int i = 0; i < t; ++i) {
    if (!out.bags.empty() && out.bags.back() == bags[i]) continue;
    out.host_labels.push_back(std::to_string(s.points[i]));
    out.bags.push_back(std::move(bags[i]));
  }
  for (int i = 1; i < static_cast<int>(out.bags.size()); ++i)
    out.host_edges.emplace_back(i - 1, i);
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c, bool require_total) {
  if (require_total) {
    for (int v = 0; v < g.size(); ++v)
      if (!c.has(v)) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c.has(u) && c.has(v) && c.color(u) == c.color(v)) return false;
  }
  return true;
}

}  // namespace vyg
