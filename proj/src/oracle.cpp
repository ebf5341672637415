#include "orientflip/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace orientflip::oracle {

namespace {

void require_edges(const GraphPtr& g, const Caps& caps) {
  if (g->m() > caps.max_edges)
    fail(Errc::too_large, "m = " + std::to_string(g->m()) + " exceeds enumeration cap " +
                              std::to_string(caps.max_edges));
  if (g->m() >= 63) fail(Errc::too_large, "orientation codes need m < 63");
}

void require_vertices(int n, const Caps& caps) {
  if (n > caps.max_vertices)
    fail(Errc::too_large,
         "n = " + std::to_string(n) + " exceeds subset enumeration cap " + std::to_string(caps.max_vertices));
}

// Arcs leaving mask under orientation d, vertices as bit positions.
int outdeg_mask(const Orientation& d, uint32_t mask) {
  int c = 0;
  for (int e = 0; e < d.m(); ++e) {
    bool tin = (mask >> d.tail(e)) & 1;
    bool hin = (mask >> d.head(e)) & 1;
    c += tin && !hin;
  }
  return c;
}

VertexSet mask_to_set(uint32_t mask, int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1) s.set(v);
  return s;
}

}  // namespace

std::vector<Orientation> enumerate_orientations(const GraphPtr& g, int k, const Caps& caps) {
  require_edges(g, caps);
  std::vector<Orientation> out;
  const uint64_t total = uint64_t{1} << g->m();
  for (uint64_t code = 0; code < total; ++code) {
    Orientation d = Orientation::from_code(g, code);
    if (is_k_edge_connected(d, k)) out.push_back(std::move(d));
  }
  return out;
}

int64_t FlipGraph::edge_count() const {
  int64_t deg = 0;
  for (const auto& a : adj) deg += static_cast<int64_t>(a.size());
  return deg / 2;
}

int FlipGraph::index_of(uint64_t code) const {
  auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) return -1;
  return static_cast<int>(it - codes.begin());
}

bool FlipGraph::connected() const {
  const int n = node_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == n;
}

int FlipGraph::diameter() const {
  const int n = node_count();
  if (n == 0) return -1;
  int best = 0;
  std::vector<int> dist(n);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) return -1;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

FlipGraph build_flip_graph(const GraphPtr& g, int k, const Caps& caps) {
  FlipGraph fg;
  fg.k = k;
  fg.graph = g;
  for (const Orientation& d : enumerate_orientations(g, k, caps)) fg.codes.push_back(d.code());
  fg.adj.resize(fg.codes.size());
  for (int i = 0; i < fg.node_count(); ++i) {
    for (int e = 0; e < g->m(); ++e) {
      int j = fg.index_of(fg.codes[i] ^ (uint64_t{1} << e));
      if (j >= 0) fg.adj[i].push_back(j);
    }
  }
  return fg;
}

std::optional<int> bfs_distance(const FlipGraph& fg, const Orientation& d1, const Orientation& d2) {
  const int a = fg.index_of(d1.code());
  const int b = fg.index_of(d2.code());
  if (a < 0 || b < 0) fail(Errc::node_not_found, "orientation not a flip graph node");
  if (a == b) return 0;
  std::vector<int> dist(fg.node_count(), -1);
  std::vector<int> queue{a};
  dist[a] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int u : fg.adj[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        if (u == b) return dist[u];
        queue.push_back(u);
      }
    }
  }
  return std::nullopt;
}

bool check_safety(const Orientation& d, const VertexSet& s_set, VertexId s, int k, SafeKind kind,
                  const Caps& caps) {
  const int n = d.n();
  require_vertices(n, caps);
  const Orientation dd = (kind == SafeKind::source) ? d : d.reversed();

  const uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1);
  const uint32_t no_root = all & ~1u;
  uint32_t s_mask = 0;
  for (int v : s_set.members()) s_mask |= 1u << v;

  // outdeg per subset of V - r, then "contains a tight subset" by removing one
  // vertex at a time.
  const uint32_t states = no_root + 1;
  std::vector<int16_t> outdeg(states, 0);
  std::vector<char> has_tight_subset(states, 0);
  for (uint32_t x = 0; x <= no_root; ++x) {
    if (x & 1u) continue;
    outdeg[x] = static_cast<int16_t>(outdeg_mask(dd, x));
    char h = (x != 0 && outdeg[x] == k) ? 1 : 0;
    if (!h) {
      for (uint32_t rest = x; rest; rest &= rest - 1) {
        if (has_tight_subset[x & ~(rest & (~rest + 1))]) {
          h = 1;
          break;
        }
      }
    }
    has_tight_subset[x] = h;
  }

  for (uint32_t x = 0; x <= no_root; ++x) {
    if (x & 1u) continue;
    if (!((x >> s) & 1)) continue;
    if ((s_mask & ~x) == 0) continue;  // S - X must be nonempty
    if (outdeg[x] <= k) return false;
    if (outdeg[x] == k + 1 && !has_tight_subset[x & ~(1u << s)]) return false;
  }
  return true;
}

TightFamilies check_families(const Orientation& d, int k, const Caps& caps) {
  const int n = d.n();
  require_vertices(n, caps);
  if (k < 1) fail(Errc::not_k_connected, "tight families need k >= 1");

  const uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1);
  const uint32_t no_root = all & ~1u;
  const Orientation rd = d.reversed();
  std::vector<VertexSet> outs, ins;
  for (uint32_t x = no_root;; x = (x - 1) & no_root) {
    if (x != 0) {
      if (outdeg_mask(d, x) == k) outs.push_back(mask_to_set(x, n));
      if (outdeg_mask(rd, x) == k) ins.push_back(mask_to_set(x, n));
    }
    if (x == 0) break;
  }

  auto minimal_only = [](std::vector<VertexSet> sets) {
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
    std::sort(keep.begin(), keep.end(), VertexSet::lex_less);
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return keep;
  };

  TightFamilies fam;
  fam.k = k;
  fam.out_minimal = minimal_only(std::move(outs));
  fam.in_minimal = minimal_only(std::move(ins));
  if (fam.out_minimal.empty()) fam.out_minimal.push_back(VertexSet::full(n));
  if (fam.in_minimal.empty()) fam.in_minimal.push_back(VertexSet::full(n));
  std::vector<VertexSet> both = fam.out_minimal;
  both.insert(both.end(), fam.in_minimal.begin(), fam.in_minimal.end());
  fam.minimal = minimal_only(std::move(both));
  fam.val = 0;
  for (const VertexSet& x : fam.minimal) fam.val += n - x.count();
  return fam;
}

int lambda_by_cuts(const Orientation& d, const Caps& caps) {
  const int n = d.n();
  require_vertices(n, caps);
  if (n < 2) fail(Errc::too_small, "lambda needs at least two vertices");
  const uint32_t all = (1u << n) - 1;
  int best = d.m() + 1;
  for (uint32_t x = 1; x < all; ++x) best = std::min(best, outdeg_mask(d, x));
  return best;
}

int lambda_undirected_by_cuts(const UndirectedMultigraph& g, const Caps& caps) {
  require_vertices(g.n, caps);
  if (g.n < 2) fail(Errc::too_small, "lambda needs at least two vertices");
  const uint32_t all = (1u << g.n) - 1;
  int best = g.m() + 1;
  for (uint32_t x = 1; x < all; ++x) {
    int c = 0;
    for (auto [u, v] : g.edges) c += ((x >> u) & 1) != ((x >> v) & 1);
    best = std::min(best, c);
  }
  return best;
}

}  // namespace orientflip::oracle
