#pragma once

#include <cstdint>
#include <vector>

#include "orientflip/multigraph.hpp"

namespace orientflip {

// Result of a minimum-cut query. Both sides are minimizers of the number of
// leaving arcs among sets containing the sources and avoiding the sinks;
// min_source_side is the inclusionwise minimal one, max_source_side the
// maximal one.
struct CutResult {
  int value = 0;
  VertexSet min_source_side;
  VertexSet max_source_side;
};

// Max number of edge-disjoint s->t paths, plus the two canonical min cuts.
CutResult max_flow(const Orientation& d, VertexId s, VertexId t);

// Minimum, over vertex sets X with sources subset of X and X disjoint from
// sinks, of the number of arcs leaving X. `limit` (when >= 0) truncates the
// search: the reported value is min(true value, limit) and the sides are only
// meaningful when value < limit.
CutResult min_cut_between(const Orientation& d, const VertexSet& sources, const VertexSet& sinks, int limit = -1);

// lambda(D): minimum over nonempty proper X of the number of arcs leaving X.
int lambda_directed(const Orientation& d);

// Global undirected edge connectivity.
int lambda_undirected(const UndirectedMultigraph& g);

int delta_plus(const Orientation& d, const VertexSet& x);
int delta_minus(const Orientation& d, const VertexSet& x);

bool is_k_edge_connected(const Orientation& d, int k);

// Inclusionwise minimal X with s in X, r not in X and exactly k arcs leaving;
// V when no such set exists. Requires D k-edge-connected.
VertexSet minimal_out_set(const Orientation& d, VertexId s, int k);
// Mirror: exactly k arcs entering.
VertexSet minimal_in_set(const Orientation& d, VertexId s, int k);

// Minimal members of the out-tight and in-tight families (k leaving resp.
// entering arcs, root excluded), their combined minimal family, and the
// potential val = sum over the combined family of (n - |X|). A family with no
// proper tight set is reported as {V}.
struct TightFamilies {
  int k = 0;
  VertexId root = kRoot;
  std::vector<VertexSet> out_minimal;
  std::vector<VertexSet> in_minimal;
  std::vector<VertexSet> minimal;
  int64_t val = 0;

  bool trivial() const { return val == 0; }
};

TightFamilies tight_families(const Orientation& d, int k);

}  // namespace orientflip
