#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orientflip/connectivity.hpp"
#include "orientflip/multigraph.hpp"

namespace orientflip {

// Ordered flips with certificates: lambdas[i] is the edge-connectivity after
// applying flips[0..i]; vals holds the potential after each completed improve
// step where the producing operation tracks it.
struct FlipSequence {
  std::vector<EdgeId> flips;
  std::vector<int> lambdas;
  std::vector<int64_t> vals;

  bool empty() const { return flips.empty(); }
  void append(const FlipSequence& o);
};

struct FlipRun {
  FlipSequence seq;
  Orientation result;
};

struct DirPath {
  std::vector<VertexId> vertices;  // vertices[i] -> vertices[i+1] via edges[i]
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
};

// Simple directed path from a safe source to a safe sink; q1_end is the index
// of the splice vertex t' between the in-avoiding prefix and the out-avoiding
// suffix.
struct FlipPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  int q1_end = 0;
};

enum class SafeKind { source, sink };

struct SafeVertex {
  VertexId vertex = -1;
  VertexSet set;   // the minimal tight set it was chosen in
  SafeKind kind = SafeKind::source;
};

// Safe source in a minimal in-tight set S (safe sink mirrors on the reversed
// orientation). For S = V the root qualifies.
VertexId safe_source(const Orientation& d, const VertexSet& s_set, int k);
VertexId safe_sink(const Orientation& d, const VertexSet& t_set, int k);

struct PathsToMinimal {
  VertexSet target;                      // a minimal tight set
  std::map<VertexId, DirPath> paths;     // one path per vertex of target
};

// From s to every vertex of some minimal out-tight set T, along paths that
// never leave an out-tight set.
PathsToMinimal path_to_minimal_out(const Orientation& d, VertexId s, int k);
// Mirror: from every vertex of some minimal in-tight set S to t, never
// entering an in-tight set.
PathsToMinimal path_from_minimal_in(const Orientation& d, VertexId t, int k);

// Which family the region R is tight in. in_tight: R has k entering arcs (or
// R = V) and strictly contains an out-tight set; out_tight is the mirror.
enum class RegionCase { in_tight, out_tight };

struct RegionChoice {
  VertexSet region;
  RegionCase rcase = RegionCase::in_tight;
};

// Inclusionwise minimal region that is tight in one direction and strictly
// contains a tight set of the other direction.
RegionChoice choose_region(const Orientation& d, int k);

// The constructed path plus the order in which its arcs get flipped. For an
// out_tight region the construction runs on the reversed orientation and
// `path` is expressed there; `flip_order` is valid for d either way.
struct PathFlipPlan {
  FlipPath path;
  std::vector<EdgeId> flip_order;
  SafeVertex source;
  SafeVertex sink;
  RegionCase rcase = RegionCase::in_tight;
};

PathFlipPlan build_flip_path(const Orientation& d, const RegionChoice& choice, int k);

// One potential-decreasing round: at most n flips, every intermediate stays
// k-edge-connected, val strictly drops.
FlipRun improve_step(const Orientation& d, int k);

struct ImproveDetail {
  FlipRun run;
  PathFlipPlan plan;
  TightFamilies before;
  TightFamilies after;
};

ImproveDetail improve_step_detailed(const Orientation& d, int k);

// Raise lambda from >= k to >= k+1 (k = 0 routes through a strong skeleton,
// k >= 1 repeats improve_step until the potential hits zero).
FlipRun augment_connectivity(const Orientation& d, int k);

// Chain augmentations from lambda(d) up to k, trimming each phase at the
// first flip that reaches the next level; the lambda certificate is
// non-decreasing and the result has lambda >= k.
FlipRun orient_k_connected(const Orientation& d, int k);

// Flip the arcs of a directed path or cycle one by one in traversal order;
// every intermediate keeps lambda >= k provided lambda(d) >= k+1.
FlipRun decompose_path_flip(const Orientation& d, const std::vector<EdgeId>& path_edges, int k);

class MiddleSearchError : public Error {
 public:
  MiddleSearchError(Orientation e1, Orientation e2, int64_t visited)
      : Error(Errc::middle_search_too_large,
              "middle search exceeded node cap after " + std::to_string(visited) + " orientations"),
        end1(std::move(e1)),
        end2(std::move(e2)) {}

  Orientation end1, end2;  // the two augmented endpoints reached so far
};

struct ReconfigureOptions {
  int64_t middle_node_cap = 2'000'000;
  // k = 1 normally routes through the shortest-sequence machinery; force the
  // three-step pipeline to exercise it regardless.
  bool force_pipeline = false;
};

// Flip sequence from d1 to d2 with every intermediate k-edge-connected.
FlipSequence reconfigure_k(const Orientation& d1, const Orientation& d2, int k,
                           const ReconfigureOptions& opts = {});

}  // namespace orientflip
