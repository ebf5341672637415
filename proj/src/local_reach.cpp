#include "orientflip/local_reach.hpp"

#include <vector>

#include "orientflip/connectivity.hpp"

namespace orientflip {

namespace {

// Vertices reachable from src in the underlying graph with two edges removed.
VertexSet component_without(const UndirectedMultigraph& g, VertexId src, EdgeId skip1, EdgeId skip2) {
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> inc(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (e == skip1 || e == skip2) continue;
    auto [u, v] = g.edges[e];
    inc[u].push_back({v, e});
    inc[v].push_back({u, e});
  }
  VertexSet seen(g.n);
  seen.set(src);
  std::vector<VertexId> stack{src};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [to, e] : inc[v])
      if (!seen.test(to)) {
        seen.set(to);
        stack.push_back(to);
      }
  }
  return seen;
}

}  // namespace

std::optional<Obstruction> find_obstruction(const Orientation& d1, const Orientation& d2) {
  if (*d1.graph != *d2.graph) fail(Errc::graph_mismatch, "orientations of different graphs");
  if (!is_strongly_connected(d1) || !is_strongly_connected(d2))
    fail(Errc::not_strong, "both orientations must be strongly connected");

  // Both orientations are strong, so across any 2-edge-cut each has one arc
  // in and one out. The pair obstructs exactly when both edges disagree.
  const auto& g = *d1.graph;
  const std::vector<EdgeId> df = diff(d1, d2);
  for (size_t i = 0; i < df.size(); ++i) {
    for (size_t j = i + 1; j < df.size(); ++j) {
      VertexSet comp = component_without(g, 0, df[i], df[j]);
      if (comp.count() < g.n) return Obstruction{df[i], df[j], comp.complement()};
    }
  }
  return std::nullopt;
}

FlipSequence reconfigure_strong(const Orientation& d1, const Orientation& d2, bool certify) {
  if (find_obstruction(d1, d2))
    fail(Errc::obstructed, "a 2-edge-cut disagrees on both edges");

  FlipSequence seq;
  Orientation cur = d1;
  while (true) {
    const std::vector<EdgeId> df = diff(cur, d2);
    if (df.empty()) break;
    bool flipped = false;
    for (EdgeId e : df) {
      cur.flip_in_place(e);
      if (is_strongly_connected(cur)) {
        seq.flips.push_back(e);
        if (certify) seq.lambdas.push_back(lambda_directed(cur));
        flipped = true;
        break;
      }
      cur.flip_in_place(e);
    }
    if (!flipped) fail(Errc::internal_invariant_violated, "no disagreeing edge is flippable");
  }
  return seq;
}

}  // namespace orientflip
