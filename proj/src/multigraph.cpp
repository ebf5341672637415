#include "orientflip/multigraph.hpp"

#include <algorithm>
#include <string>

namespace orientflip {

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

int UndirectedMultigraph::cut_size(const VertexSet& x) const {
  int c = 0;
  for (const auto& [u, v] : edges) c += x.test(u) != x.test(v);
  return c;
}

UndirectedMultigraph build(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list) {
  if (n < 0) fail(Errc::vertex_out_of_range, "negative vertex count");
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::vertex_out_of_range,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
    if (u == v) fail(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
  }
  return UndirectedMultigraph{n, edge_list};
}

uint64_t Orientation::code() const {
  uint64_t c = 0;
  for (int e = 0; e < m(); ++e)
    if (rev[e]) c |= uint64_t{1} << e;
  return c;
}

Orientation Orientation::from_code(GraphPtr g, uint64_t code) {
  Orientation d(std::move(g));
  for (int e = 0; e < d.m(); ++e) d.rev[e] = (code >> e) & 1;
  return d;
}

Orientation flip(const Orientation& d, EdgeId e) {
  if (e < 0 || e >= d.m()) fail(Errc::edge_out_of_range, "edge id " + std::to_string(e));
  Orientation out = d;
  out.flip_in_place(e);
  return out;
}

std::vector<EdgeId> diff(const Orientation& d1, const Orientation& d2) {
  if (*d1.graph != *d2.graph) fail(Errc::graph_mismatch, "orientations of different graphs");
  std::vector<EdgeId> out;
  for (int e = 0; e < d1.m(); ++e)
    if (d1.rev[e] != d2.rev[e]) out.push_back(e);
  return out;
}

namespace {

// Reachable set from r along arcs (forward) or against them (backward).
// tree_arc[v] records the arc that discovered v.
VertexSet reach(const Orientation& d, VertexId r, bool forward, std::vector<EdgeId>* tree_arc = nullptr) {
  const int n = d.n();
  VertexSet seen(n);
  seen.set(r);
  if (tree_arc) tree_arc->assign(n, -1);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (int e = 0; e < d.m(); ++e) {
    VertexId from = forward ? d.tail(e) : d.head(e);
    VertexId to = forward ? d.head(e) : d.tail(e);
    adj[from].push_back({to, e});
  }
  std::vector<VertexId> stack{r};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [to, e] : adj[v]) {
      if (!seen.test(to)) {
        seen.set(to);
        if (tree_arc) (*tree_arc)[to] = e;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Orientation& d) {
  const int n = d.n();
  if (n <= 1) return true;
  return reach(d, 0, true).count() == n && reach(d, 0, false).count() == n;
}

std::vector<EdgeId> strong_skeleton(const Orientation& d_ref, VertexId r) {
  const int n = d_ref.n();
  if (r < 0 || r >= n) fail(Errc::vertex_out_of_range, "root " + std::to_string(r));
  std::vector<EdgeId> out_tree, in_tree;
  if (reach(d_ref, r, true, &out_tree).count() != n || reach(d_ref, r, false, &in_tree).count() != n)
    fail(Errc::not_strongly_connected, "reference orientation is not strongly connected");
  std::vector<EdgeId> arcs;
  for (VertexId v = 0; v < n; ++v) {
    if (out_tree[v] >= 0) arcs.push_back(out_tree[v]);
    if (in_tree[v] >= 0) arcs.push_back(in_tree[v]);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

Orientation strong_orientation_reference(const GraphPtr& g) {
  const int n = g->n;
  Orientation d(g);
  if (n <= 1) return d;

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> inc(n);
  for (int e = 0; e < g->m(); ++e) {
    auto [u, v] = g->edges[e];
    inc[u].push_back({v, e});
    inc[v].push_back({u, e});
  }

  // Iterative DFS from the root; tree edges point away from the root, every
  // other edge is oriented from the later-discovered endpoint to the earlier.
  std::vector<int> disc(n, -1);
  std::vector<bool> oriented(g->m(), false);
  int timer = 0;
  std::vector<std::pair<VertexId, size_t>> stack{{0, 0}};
  disc[0] = timer++;
  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx == inc[v].size()) {
      stack.pop_back();
      continue;
    }
    auto [to, e] = inc[v][idx++];
    if (oriented[e]) continue;
    if (disc[to] == -1) {
      oriented[e] = true;
      d.rev[e] = (g->edges[e].first != v);
      disc[to] = timer++;
      stack.push_back({to, 0});
    } else if (disc[to] < disc[v]) {
      oriented[e] = true;
      d.rev[e] = (g->edges[e].first != v);
    }
  }

  if (!is_strongly_connected(d))
    fail(Errc::not_strongly_connected, "graph has no strongly connected orientation (bridge or disconnected)");
  return d;
}

}  // namespace orientflip
