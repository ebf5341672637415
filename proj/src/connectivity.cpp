#include "orientflip/connectivity.hpp"

#include <algorithm>
#include <string>

namespace orientflip {

namespace {

// Dinic on small unit-capacity networks. Nodes beyond the graph's n are
// super-terminals used to contract source/sink sets.
struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
  };

  explicit FlowNet(int nodes) : adj(nodes), level(nodes), it(nodes) {}

  void add(int u, int v, int cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    level[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (const Arc& a : adj[v]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (size_t& i = it[v]; i < adj[v].size(); ++i) {
      Arc& a = adj[v][i];
      if (a.cap > 0 && level[a.to] == level[v] + 1) {
        int got = dfs(a.to, t, std::min(f, a.cap));
        if (got > 0) {
          a.cap -= got;
          adj[a.to][a.rev].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while ((limit < 0 || flow < limit) && bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (int f = dfs(s, t, limit < 0 ? INT32_MAX : limit - flow)) {
        flow += f;
        if (limit >= 0 && flow >= limit) break;
      }
    }
    return flow;
  }

  // Vertices (restricted to [0, n)) reachable from s in the residual graph.
  VertexSet residual_from(int s, int n) const {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : adj[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
      if (seen[v]) out.set(v);
    return out;
  }

  // Vertices (restricted to [0, n)) that reach t in the residual graph.
  VertexSet residual_to(int t, int n) const {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{t};
    seen[t] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : adj[v]) {
        // Arc (a.to -> v) has residual capacity stored on the paired entry.
        if (!seen[a.to] && adj[a.to][a.rev].cap > 0) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
      if (seen[v]) out.set(v);
    return out;
  }

  std::vector<std::vector<Arc>> adj;
  std::vector<int> level;
  std::vector<size_t> it;
  std::vector<int> queue;
};

CutResult run_cut(const Orientation& d, const VertexSet& sources, const VertexSet& sinks, int limit) {
  const int n = d.n();
  const int inf = d.m() + 1;
  FlowNet net(n + 2);
  const int ss = n, tt = n + 1;
  for (int e = 0; e < d.m(); ++e) net.add(d.tail(e), d.head(e), 1);
  for (int v : sources.members()) net.add(ss, v, inf);
  for (int v : sinks.members()) net.add(v, tt, inf);

  CutResult res;
  res.value = net.max_flow(ss, tt, limit);
  res.min_source_side = net.residual_from(ss, n);
  res.max_source_side = net.residual_to(tt, n).complement();
  return res;
}

}  // namespace

CutResult max_flow(const Orientation& d, VertexId s, VertexId t) {
  if (s == t) fail(Errc::same_vertex, "max_flow with s == t");
  const int n = d.n();
  if (s < 0 || s >= n || t < 0 || t >= n) fail(Errc::vertex_out_of_range, "flow endpoint");
  return run_cut(d, VertexSet::of(n, {s}), VertexSet::of(n, {t}), -1);
}

CutResult min_cut_between(const Orientation& d, const VertexSet& sources, const VertexSet& sinks, int limit) {
  if (sources.empty() || sinks.empty()) fail(Errc::vertex_out_of_range, "empty terminal set");
  if (sources.intersects(sinks)) fail(Errc::same_vertex, "source and sink sets intersect");
  return run_cut(d, sources, sinks, limit);
}

int lambda_directed(const Orientation& d) {
  const int n = d.n();
  if (n < 2) fail(Errc::too_small, "lambda needs at least two vertices");
  int best = d.m() + 1;
  for (VertexId v = 1; v < n; ++v) {
    best = std::min(best, run_cut(d, VertexSet::of(n, {kRoot}), VertexSet::of(n, {v}), best).value);
    if (best == 0) return 0;
    best = std::min(best, run_cut(d, VertexSet::of(n, {v}), VertexSet::of(n, {kRoot}), best).value);
    if (best == 0) return 0;
  }
  return best;
}

int lambda_undirected(const UndirectedMultigraph& g) {
  if (g.n < 2) fail(Errc::too_small, "lambda needs at least two vertices");
  // Bidirect every edge; directed connectivity of the result equals the
  // undirected connectivity, and cuts from the root reach every proper cut.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(2 * g.edges.size());
  for (auto [u, v] : g.edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  Orientation bidir(share(UndirectedMultigraph{g.n, arcs}));
  int best = static_cast<int>(arcs.size()) + 1;
  for (VertexId v = 1; v < g.n; ++v) {
    best = std::min(best, run_cut(bidir, VertexSet::of(g.n, {kRoot}), VertexSet::of(g.n, {v}), best).value);
    if (best == 0) return 0;
  }
  return best;
}

int delta_plus(const Orientation& d, const VertexSet& x) {
  int c = 0;
  for (int e = 0; e < d.m(); ++e) c += x.test(d.tail(e)) && !x.test(d.head(e));
  return c;
}

int delta_minus(const Orientation& d, const VertexSet& x) {
  int c = 0;
  for (int e = 0; e < d.m(); ++e) c += !x.test(d.tail(e)) && x.test(d.head(e));
  return c;
}

bool is_k_edge_connected(const Orientation& d, int k) {
  if (k <= 0) return true;
  const int n = d.n();
  if (n <= 1) return true;
  if (k == 1) return is_strongly_connected(d);
  for (VertexId v = 1; v < n; ++v) {
    if (run_cut(d, VertexSet::of(n, {kRoot}), VertexSet::of(n, {v}), k).value < k) return false;
    if (run_cut(d, VertexSet::of(n, {v}), VertexSet::of(n, {kRoot}), k).value < k) return false;
  }
  return true;
}

namespace {

// Shared implementation of minimal_out_set; the in-variant runs on the
// reversed orientation.
VertexSet minimal_out_impl(const Orientation& d, VertexId s, int k) {
  const int n = d.n();
  if (s == kRoot || s < 0 || s >= n) fail(Errc::vertex_out_of_range, "s must be a non-root vertex");
  if (k < 1) fail(Errc::not_k_connected, "tight sets need k >= 1");
  CutResult cut = run_cut(d, VertexSet::of(n, {s}), VertexSet::of(n, {kRoot}), -1);
  if (cut.value < k) fail(Errc::not_k_connected, "orientation is not k-edge-connected");
  if (cut.value > k) return VertexSet::full(n);
  return cut.min_source_side;
}

void check_underlying(const Orientation& d, const VertexSet& x, int k) {
  if (d.graph->cut_size(x) < 2 * k + 2)
    fail(Errc::underlying_connectivity_too_low,
         "found a cut of undirected size " + std::to_string(d.graph->cut_size(x)) + " < " +
             std::to_string(2 * k + 2));
}

}  // namespace

VertexSet minimal_out_set(const Orientation& d, VertexId s, int k) { return minimal_out_impl(d, s, k); }

VertexSet minimal_in_set(const Orientation& d, VertexId s, int k) {
  return minimal_out_impl(d.reversed(), s, k);
}

TightFamilies tight_families(const Orientation& d, int k) {
  const int n = d.n();
  if (k < 1) fail(Errc::not_k_connected, "tight families need k >= 1");
  TightFamilies fam;
  fam.k = k;
  const Orientation rd = d.reversed();
  std::vector<VertexSet> outs, ins;
  for (VertexId s = 1; s < n; ++s) {
    VertexSet xo = minimal_out_impl(d, s, k);
    if (xo.count() < n) {
      check_underlying(d, xo, k);
      outs.push_back(xo);
    }
    VertexSet xi = minimal_out_impl(rd, s, k);
    if (xi.count() < n) {
      check_underlying(d, xi, k);
      ins.push_back(xi);
    }
  }

  auto minimal_only = [](std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), VertexSet::lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> keep;
    for (const VertexSet& x : sets) {
      bool dominated = false;
      for (const VertexSet& y : sets)
        if (y != x && y.is_subset_of(x)) {
          dominated = true;
          break;
        }
      if (!dominated) keep.push_back(x);
    }
    return keep;
  };

  fam.out_minimal = minimal_only(std::move(outs));
  fam.in_minimal = minimal_only(std::move(ins));
  if (fam.out_minimal.empty()) fam.out_minimal.push_back(VertexSet::full(n));
  if (fam.in_minimal.empty()) fam.in_minimal.push_back(VertexSet::full(n));

  std::vector<VertexSet> all = fam.out_minimal;
  all.insert(all.end(), fam.in_minimal.begin(), fam.in_minimal.end());
  fam.minimal = minimal_only(std::move(all));

  fam.val = 0;
  for (const VertexSet& x : fam.minimal) fam.val += n - x.count();
  return fam;
}

}  // namespace orientflip
