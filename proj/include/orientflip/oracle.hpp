#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orientflip/connectivity.hpp"
#include "orientflip/multigraph.hpp"

// Brute-force ground truth: exhaustive enumeration over orientations and
// vertex subsets. Every routine here is independent of the constructive
// algorithms it is used to check.
namespace orientflip::oracle {

struct Caps {
  int max_edges = 24;      // orientation enumeration: 2^m states
  int max_vertices = 14;   // subset enumeration: 2^n states
  int64_t max_nodes = 2'000'000;  // BFS node budget
};

// All direction bitvectors with lambda >= k, ascending by code.
std::vector<Orientation> enumerate_orientations(const GraphPtr& g, int k, const Caps& caps = {});

struct FlipGraph {
  int k = 0;
  GraphPtr graph;
  std::vector<uint64_t> codes;          // sorted ascending
  std::vector<std::vector<int>> adj;    // node indices, flip distance 1

  int node_count() const { return static_cast<int>(codes.size()); }
  int64_t edge_count() const;
  int index_of(uint64_t code) const;    // -1 when absent
  Orientation node(int i) const { return Orientation::from_code(graph, codes[i]); }

  bool connected() const;
  // Longest shortest path; -1 when disconnected or empty.
  int diameter() const;
};

FlipGraph build_flip_graph(const GraphPtr& g, int k, const Caps& caps = {});

std::optional<int> bfs_distance(const FlipGraph& fg, const Orientation& d1, const Orientation& d2);

enum class SafeKind { source, sink };

// Literal safety definition, checked over every subset X of V - r with the
// candidate inside and part of S outside.
bool check_safety(const Orientation& d, const VertexSet& s_set, VertexId s, int k, SafeKind kind,
                  const Caps& caps = {});

// Tight families by direct subset enumeration.
TightFamilies check_families(const Orientation& d, int k, const Caps& caps = {});

// lambda by scanning all proper nonempty subsets.
int lambda_by_cuts(const Orientation& d, const Caps& caps = {});
int lambda_undirected_by_cuts(const UndirectedMultigraph& g, const Caps& caps = {});

}  // namespace orientflip::oracle
