#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "orientflip/errors.hpp"

namespace orientflip {

// Vertices are dense indices in [0, n); by convention vertex 0 is the root r.
using VertexId = int;
// Edges are dense indices in [0, m), assigned in input order; parallel edges
// get distinct ids.
using EdgeId = int;

constexpr VertexId kRoot = 0;

// Subset of [0, n) backed by 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }
  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe_size() const { return n_; }
  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[v >> 6] |= uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  // Smallest member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  VertexSet operator&(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  VertexSet operator|(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  VertexSet minus(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
  VertexSet complement() const {
    VertexSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Deterministic total order: lexicographic over sorted member lists.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  template <class F>
  VertexSet zip(const VertexSet& o, F f) const {
    VertexSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = f(w_[i], o.w_[i]);
    return r;
  }
  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Undirected multigraph without self-loops. The edge list order is canonical
// and defines EdgeIds.
struct UndirectedMultigraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool operator==(const UndirectedMultigraph& o) const = default;

  // Number of edges with exactly one endpoint in x.
  int cut_size(const VertexSet& x) const;
};

UndirectedMultigraph build(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list);

using GraphPtr = std::shared_ptr<const UndirectedMultigraph>;

inline GraphPtr share(UndirectedMultigraph g) {
  return std::make_shared<const UndirectedMultigraph>(std::move(g));
}

// Direction assignment over a shared multigraph. rev[e] == false means the arc
// follows the stored (u, v) order; the underlying graph never changes.
struct Orientation {
  GraphPtr graph;
  std::vector<bool> rev;

  Orientation() = default;
  explicit Orientation(GraphPtr g) : graph(std::move(g)), rev(graph->m(), false) {}
  Orientation(GraphPtr g, std::vector<bool> r) : graph(std::move(g)), rev(std::move(r)) {}

  int n() const { return graph->n; }
  int m() const { return graph->m(); }

  VertexId tail(EdgeId e) const { return rev[e] ? graph->edges[e].second : graph->edges[e].first; }
  VertexId head(EdgeId e) const { return rev[e] ? graph->edges[e].first : graph->edges[e].second; }

  void flip_in_place(EdgeId e) { rev[e] = !rev[e]; }

  // All arcs reversed; same graph, same EdgeIds.
  Orientation reversed() const {
    Orientation d = *this;
    d.rev.flip();
    return d;
  }

  // Direction bits packed little-endian by EdgeId; requires m <= 64.
  uint64_t code() const;
  static Orientation from_code(GraphPtr g, uint64_t code);

  bool operator==(const Orientation& o) const { return *graph == *o.graph && rev == o.rev; }
};

Orientation flip(const Orientation& d, EdgeId e);

// EdgeIds on which the two orientations disagree.
std::vector<EdgeId> diff(const Orientation& d1, const Orientation& d2);

bool is_strongly_connected(const Orientation& d);

// Arc ids of an out-tree plus an in-tree rooted at r: at most 2n - 2 arcs whose
// induced subgraph is strongly connected.
std::vector<EdgeId> strong_skeleton(const Orientation& d_ref, VertexId r);

// A strongly connected orientation of a bridgeless connected graph, built by
// DFS (tree arcs down, remaining edges up).
Orientation strong_orientation_reference(const GraphPtr& g);

}  // namespace orientflip
