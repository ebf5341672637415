#include "orientflip/flip_core.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "orientflip/local_reach.hpp"

namespace orientflip {

void FlipSequence::append(const FlipSequence& o) {
  flips.insert(flips.end(), o.flips.begin(), o.flips.end());
  lambdas.insert(lambdas.end(), o.lambdas.begin(), o.lambdas.end());
  vals.insert(vals.end(), o.vals.begin(), o.vals.end());
}

namespace {

using Adj = std::vector<std::vector<std::pair<VertexId, EdgeId>>>;

Adj out_adjacency(const Orientation& d) {
  Adj adj(d.n());
  for (int e = 0; e < d.m(); ++e) adj[d.tail(e)].push_back({d.head(e), e});
  return adj;
}

struct BfsTree {
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  VertexSet reached;
};

// BFS inside d[allowed]; adjacency is scanned in EdgeId order, so discovered
// paths are deterministic.
BfsTree bfs_in(const Adj& adj, const VertexSet& allowed, VertexId src, int n) {
  BfsTree t{std::vector<VertexId>(n, -1), std::vector<EdgeId>(n, -1), VertexSet(n)};
  t.reached.set(src);
  std::vector<VertexId> queue{src};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    for (auto [to, e] : adj[v]) {
      if (allowed.test(to) && !t.reached.test(to)) {
        t.reached.set(to);
        t.parent[to] = v;
        t.parent_edge[to] = e;
        queue.push_back(to);
      }
    }
  }
  return t;
}

DirPath extract_path(const BfsTree& t, VertexId src, VertexId dst) {
  DirPath p;
  VertexId v = dst;
  while (v != src) {
    p.vertices.push_back(v);
    p.edges.push_back(t.parent_edge[v]);
    v = t.parent[v];
  }
  p.vertices.push_back(src);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

VertexSet x_out_or_full(const Orientation& d, VertexId s, int k) {
  if (s == kRoot) return VertexSet::full(d.n());
  return minimal_out_set(d, s, k);
}

PathsToMinimal path_to_minimal_out_impl(const Orientation& d, const Adj& adj, VertexId s, int k, int depth) {
  const int n = d.n();
  if (depth > n) fail(Errc::internal_invariant_violated, "descent did not terminate");
  const VertexSet x = x_out_or_full(d, s, k);

  // Vertices of x whose own minimal out-set is strictly smaller than x.
  std::vector<std::pair<VertexId, VertexSet>> smaller;
  for (VertexId v : x.members()) {
    if (v == s || v == kRoot) continue;
    VertexSet xv = minimal_out_set(d, v, k);
    if (xv != x) {
      if (!xv.is_subset_of(x)) fail(Errc::internal_invariant_violated, "nested out-set escapes its parent");
      smaller.push_back({v, xv});
    }
  }

  if (smaller.empty()) {
    // x is a minimal out-tight set (or V with no proper tight set): every
    // vertex is reachable inside d[x] and those paths leave no tight set.
    BfsTree t = bfs_in(adj, x, s, n);
    if (t.reached != x) fail(Errc::internal_invariant_violated, "tight set not internally reachable");
    PathsToMinimal out;
    out.target = x;
    for (VertexId v : x.members()) out.paths[v] = extract_path(t, s, v);
    return out;
  }

  // Walk toward a vertex with a smaller out-set; recurse from the first
  // vertex on the walk whose out-set shrank, then splice.
  BfsTree t = bfs_in(adj, x, s, n);
  VertexId u = smaller.front().first;
  if (!t.reached.test(u)) fail(Errc::internal_invariant_violated, "tight set not internally reachable");
  DirPath q = extract_path(t, s, u);

  int split = -1;
  for (size_t i = 1; i < q.vertices.size(); ++i) {
    VertexId w = q.vertices[i];
    bool shrinks = false;
    for (const auto& [v, xv] : smaller)
      if (v == w) {
        shrinks = true;
        break;
      }
    if (shrinks) {
      split = static_cast<int>(i);
      break;
    }
  }
  if (split < 0) fail(Errc::internal_invariant_violated, "no shrink point on walk");
  VertexId s2 = q.vertices[split];

  PathsToMinimal inner = path_to_minimal_out_impl(d, adj, s2, k, depth + 1);
  PathsToMinimal out;
  out.target = inner.target;
  for (auto& [tgt, suffix] : inner.paths) {
    DirPath full;
    full.vertices.assign(q.vertices.begin(), q.vertices.begin() + split + 1);
    full.edges.assign(q.edges.begin(), q.edges.begin() + split);
    full.vertices.insert(full.vertices.end(), suffix.vertices.begin() + 1, suffix.vertices.end());
    full.edges.insert(full.edges.end(), suffix.edges.begin(), suffix.edges.end());
    out.paths[tgt] = std::move(full);
  }
  return out;
}

DirPath reverse_path(const DirPath& p) {
  DirPath r;
  r.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
  r.edges.assign(p.edges.rbegin(), p.edges.rend());
  return r;
}

TightFamilies swapped(const TightFamilies& fam) {
  TightFamilies s = fam;
  std::swap(s.out_minimal, s.in_minimal);
  return s;
}

bool set_count_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return VertexSet::lex_less(a, b);
}

RegionChoice choose_region_impl(const Orientation& d, int k, const TightFamilies& fam) {
  const int n = d.n();
  if (fam.trivial()) fail(Errc::already_tight, "no proper tight set exists");
  const Orientation rd = d.reversed();
  const VertexSet root_only = VertexSet::of(n, {kRoot});

  std::vector<RegionChoice> cands;
  auto add_candidates = [&](const std::vector<VertexSet>& minimal, const Orientation& flow_world,
                            RegionCase rcase) {
    for (const VertexSet& x : minimal) {
      if (x.count() == n) continue;
      CutResult cut = min_cut_between(flow_world, x, root_only);
      if (cut.value < k) fail(Errc::not_k_connected, "orientation is not k-edge-connected");
      VertexSet region = (cut.value == k) ? cut.min_source_side : VertexSet::full(n);
      if (region == x)
        fail(Errc::underlying_connectivity_too_low, "set tight in both directions");
      cands.push_back({region, rcase});
    }
  };
  // Minimal superset of an out-tight set that is in-tight: cut on the
  // reversed orientation; mirror for the other case.
  add_candidates(fam.out_minimal, rd, RegionCase::in_tight);
  add_candidates(fam.in_minimal, d, RegionCase::out_tight);

  if (cands.empty()) fail(Errc::internal_invariant_violated, "no region candidate");
  std::sort(cands.begin(), cands.end(), [](const RegionChoice& a, const RegionChoice& b) {
    if (a.region != b.region) return set_count_lex_less(a.region, b.region);
    return a.rcase == RegionCase::in_tight && b.rcase == RegionCase::out_tight;
  });
  return cands.front();
}

// Membership in an out-tight set strictly inside the region.
bool in_proper_out_set(const Orientation& d, VertexId v, const VertexSet& region, int k) {
  const int n = d.n();
  if (v == kRoot) return false;
  if (region.count() == n) return minimal_out_set(d, v, k).count() < n;
  CutResult cut = min_cut_between(d, VertexSet::of(n, {v}), region.complement());
  if (cut.value < k) fail(Errc::not_k_connected, "orientation is not k-edge-connected");
  return cut.value == k && cut.min_source_side != region;
}

PathFlipPlan build_plan(const Orientation& d, const VertexSet& r_set, int k, const TightFamilies& fam,
                        bool mirrored) {
  const int n = d.n();

  // Candidate targets: minimal out-tight sets strictly inside the region.
  std::vector<VertexSet> cands;
  for (const VertexSet& x : fam.out_minimal)
    if (x.count() < n && x.is_subset_of(r_set) && x != r_set) cands.push_back(x);
  if (cands.empty())
    fail(Errc::not_minimal_tight_set, "region contains no out-tight set");
  std::sort(cands.begin(), cands.end(), VertexSet::lex_less);
  const VertexSet t_star_set = cands.front();
  const VertexId t_star = t_star_set.first();

  PathsToMinimal from_in = path_from_minimal_in(d, t_star, k);
  const VertexId s = safe_source(d, from_in.target, k);
  const DirPath& p_s = from_in.paths.at(s);

  int split = -1;
  for (size_t i = 0; i < p_s.vertices.size(); ++i) {
    if (in_proper_out_set(d, p_s.vertices[i], r_set, k)) {
      split = static_cast<int>(i);
      break;
    }
  }
  if (split < 0) fail(Errc::internal_invariant_violated, "no entry vertex into an out-tight set");
  const VertexId t_prime = p_s.vertices[split];

  PathsToMinimal to_out = path_to_minimal_out(d, t_prime, k);
  if (!to_out.target.is_subset_of(r_set) || to_out.target == r_set)
    fail(Errc::internal_invariant_violated, "sink set escapes the region");
  const VertexId t = safe_sink(d, to_out.target, k);
  const DirPath& q2 = to_out.paths.at(t);

  PathFlipPlan plan;
  plan.rcase = mirrored ? RegionCase::out_tight : RegionCase::in_tight;
  plan.source = {s, from_in.target, SafeKind::source};
  plan.sink = {t, to_out.target, SafeKind::sink};
  plan.path.vertices.assign(p_s.vertices.begin(), p_s.vertices.begin() + split + 1);
  plan.path.edges.assign(p_s.edges.begin(), p_s.edges.begin() + split);
  plan.path.vertices.insert(plan.path.vertices.end(), q2.vertices.begin() + 1, q2.vertices.end());
  plan.path.edges.insert(plan.path.edges.end(), q2.edges.begin(), q2.edges.end());
  plan.path.q1_end = split;

  // The construction yields a simple path; flips run from the sink end back
  // toward the source.
  std::vector<VertexId> sorted_verts = plan.path.vertices;
  std::sort(sorted_verts.begin(), sorted_verts.end());
  if (std::adjacent_find(sorted_verts.begin(), sorted_verts.end()) != sorted_verts.end())
    fail(Errc::internal_invariant_violated, "constructed walk revisits a vertex");
  if (plan.path.edges.empty()) fail(Errc::internal_invariant_violated, "empty flip path");

  plan.flip_order.assign(plan.path.edges.rbegin(), plan.path.edges.rend());
  return plan;
}

struct StepOutcome {
  FlipSequence seq;
  Orientation result;
  TightFamilies families;
  PathFlipPlan plan;
};

StepOutcome improve_once(const Orientation& d, int k, const TightFamilies& fam) {
  RegionChoice choice = choose_region_impl(d, k, fam);
  PathFlipPlan plan = (choice.rcase == RegionCase::in_tight)
                          ? build_plan(d, choice.region, k, fam, false)
                          : build_plan(d.reversed(), choice.region, k, swapped(fam), true);

  StepOutcome out;
  out.plan = std::move(plan);
  out.result = d;
  for (EdgeId e : out.plan.flip_order) {
    out.result.flip_in_place(e);
    int lam = lambda_directed(out.result);
    if (lam < k) fail(Errc::internal_invariant_violated, "intermediate lost k-edge-connectivity");
    out.seq.flips.push_back(e);
    out.seq.lambdas.push_back(lam);
  }
  out.families = tight_families(out.result, k);
  if (out.families.val >= fam.val)
    fail(Errc::internal_invariant_violated, "potential did not decrease");
  out.seq.vals.push_back(out.families.val);
  return out;
}

struct AugmentDetail {
  FlipRun run;
  std::vector<int> step_lengths;
};

AugmentDetail augment_detail(const Orientation& d, int k) {
  const int n = d.n();
  AugmentDetail out{{FlipSequence{}, d}, {}};
  if (n <= 1) return out;
  if (lambda_undirected(*d.graph) < 2 * k + 2)
    fail(Errc::underlying_connectivity_too_low,
         "underlying graph is not " + std::to_string(2 * k + 2) + "-edge-connected");
  if (!is_k_edge_connected(d, k)) fail(Errc::not_k_connected, "orientation is not k-edge-connected");

  if (k == 0) {
    // Any strong skeleton will do: flip the disagreeing skeleton arcs in
    // EdgeId order; intermediates are unconstrained at k = 0.
    Orientation ref = strong_orientation_reference(d.graph);
    for (EdgeId e : strong_skeleton(ref, kRoot)) {
      if (out.run.result.rev[e] != ref.rev[e]) {
        out.run.result.flip_in_place(e);
        out.run.seq.flips.push_back(e);
        out.run.seq.lambdas.push_back(lambda_directed(out.run.result));
        out.step_lengths.push_back(1);
      }
    }
    if (!is_strongly_connected(out.run.result))
      fail(Errc::internal_invariant_violated, "skeleton flips did not reach a strong orientation");
    return out;
  }

  TightFamilies fam = tight_families(d, k);
  int64_t rounds = 0;
  while (!fam.trivial()) {
    if (++rounds > static_cast<int64_t>(n) * n + 1)
      fail(Errc::internal_invariant_violated, "potential descent did not terminate");
    StepOutcome step = improve_once(out.run.result, k, fam);
    out.step_lengths.push_back(static_cast<int>(step.seq.flips.size()));
    out.run.seq.append(step.seq);
    out.run.result = std::move(step.result);
    fam = std::move(step.families);
  }
  return out;
}

std::vector<EdgeId> middle_bfs(const Orientation& a, const Orientation& b, int k, int64_t cap) {
  if (a.m() >= 63) throw MiddleSearchError(a, b, 0);
  const uint64_t start = a.code(), goal = b.code();
  if (start == goal) return {};
  std::unordered_map<uint64_t, std::pair<uint64_t, EdgeId>> parent;
  parent.reserve(1024);
  parent[start] = {start, -1};
  std::vector<uint64_t> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint64_t c = queue[qi];
    for (EdgeId e = 0; e < a.m(); ++e) {
      uint64_t c2 = c ^ (uint64_t{1} << e);
      if (parent.count(c2)) continue;
      Orientation cand = Orientation::from_code(a.graph, c2);
      if (!is_k_edge_connected(cand, k)) continue;
      parent[c2] = {c, e};
      if (c2 == goal) {
        std::vector<EdgeId> flips;
        for (uint64_t at = goal; at != start; at = parent[at].first) flips.push_back(parent[at].second);
        std::reverse(flips.begin(), flips.end());
        return flips;
      }
      if (static_cast<int64_t>(parent.size()) > cap) throw MiddleSearchError(a, b, parent.size());
      queue.push_back(c2);
    }
  }
  fail(Errc::internal_invariant_violated, "flip graph component does not contain the target");
}

}  // namespace

VertexId safe_source(const Orientation& d, const VertexSet& s_set, int k) {
  const int n = d.n();
  if (k < 1) fail(Errc::not_k_connected, "safety needs k >= 1");
  if (s_set.count() == n) return kRoot;
  if (s_set.test(kRoot) || s_set.empty())
    fail(Errc::not_minimal_tight_set, "proper tight sets exclude the root");
  if (delta_minus(d, s_set) != k) fail(Errc::not_minimal_tight_set, "set is not in-tight");
  if (d.graph->cut_size(s_set) < 2 * k + 2)
    fail(Errc::precondition_connectivity, "tight set has undirected cut below 2k+2");
  for (VertexId v : s_set.members())
    if (minimal_in_set(d, v, k) != s_set)
      fail(Errc::not_minimal_tight_set, "set is not inclusionwise minimal");

  // Carve out the maximal out-tight subsets, then the maximal subsets of the
  // remainder with k+1 leaving arcs; anything left over is safe.
  const VertexSet outside = s_set.complement();
  VertexSet remainder = s_set;
  for (VertexId v : s_set.members()) {
    if (!remainder.test(v)) continue;
    CutResult cut = min_cut_between(d, VertexSet::of(n, {v}), outside);
    if (cut.value < k) fail(Errc::not_k_connected, "orientation is not k-edge-connected");
    if (cut.value == k) remainder = remainder.minus(cut.max_source_side);
  }
  const VertexSet outside2 = remainder.complement();
  for (VertexId v : remainder.members()) {
    CutResult cut = min_cut_between(d, VertexSet::of(n, {v}), outside2);
    if (cut.value <= k)
      fail(Errc::precondition_connectivity, "tight subset survived carving; graph below 2k+2");
    if (cut.value >= k + 2) return v;
  }
  fail(Errc::precondition_connectivity, "no safe vertex; graph below 2k+2");
}

VertexId safe_sink(const Orientation& d, const VertexSet& t_set, int k) {
  return safe_source(d.reversed(), t_set, k);
}

PathsToMinimal path_to_minimal_out(const Orientation& d, VertexId s, int k) {
  if (k < 1) fail(Errc::not_k_connected, "tight sets need k >= 1");
  if (s < 0 || s >= d.n()) fail(Errc::vertex_out_of_range, "s");
  if (!is_k_edge_connected(d, k)) fail(Errc::not_k_connected, "orientation is not k-edge-connected");
  Adj adj = out_adjacency(d);
  return path_to_minimal_out_impl(d, adj, s, k, 0);
}

PathsToMinimal path_from_minimal_in(const Orientation& d, VertexId t, int k) {
  PathsToMinimal rev = path_to_minimal_out(d.reversed(), t, k);
  PathsToMinimal out;
  out.target = rev.target;
  for (auto& [src, p] : rev.paths) out.paths[src] = reverse_path(p);
  return out;
}

RegionChoice choose_region(const Orientation& d, int k) {
  return choose_region_impl(d, k, tight_families(d, k));
}

PathFlipPlan build_flip_path(const Orientation& d, const RegionChoice& choice, int k) {
  TightFamilies fam = tight_families(d, k);
  if (choice.rcase == RegionCase::in_tight) return build_plan(d, choice.region, k, fam, false);
  return build_plan(d.reversed(), choice.region, k, swapped(fam), true);
}

FlipRun improve_step(const Orientation& d, int k) { return improve_step_detailed(d, k).run; }

ImproveDetail improve_step_detailed(const Orientation& d, int k) {
  if (k < 1) fail(Errc::not_k_connected, "improve step needs k >= 1");
  TightFamilies fam = tight_families(d, k);
  if (fam.trivial()) fail(Errc::already_tight, "orientation is already (k+1)-edge-connected");
  StepOutcome step = improve_once(d, k, fam);
  return ImproveDetail{{std::move(step.seq), std::move(step.result)}, std::move(step.plan), std::move(fam),
                       std::move(step.families)};
}

FlipRun augment_connectivity(const Orientation& d, int k) { return augment_detail(d, k).run; }

FlipRun orient_k_connected(const Orientation& d, int k) {
  FlipRun out{FlipSequence{}, d};
  const int n = d.n();
  if (k <= 0 || n <= 1) return out;
  if (lambda_undirected(*d.graph) < 2 * k)
    fail(Errc::underlying_connectivity_too_low,
         "underlying graph is not " + std::to_string(2 * k) + "-edge-connected");

  int p = lambda_directed(d);
  while (p < k) {
    AugmentDetail phase = augment_detail(out.result, p);
    // Keep the phase only up to the first flip that reaches level p+1.
    size_t cut = 0;
    while (cut < phase.run.seq.lambdas.size() && phase.run.seq.lambdas[cut] < p + 1) ++cut;
    if (cut == phase.run.seq.lambdas.size())
      fail(Errc::internal_invariant_violated, "augmentation never reached the next level");
    int64_t flips_kept = static_cast<int64_t>(cut) + 1;
    for (size_t i = 0; i < static_cast<size_t>(flips_kept); ++i) {
      out.result.flip_in_place(phase.run.seq.flips[i]);
      out.seq.flips.push_back(phase.run.seq.flips[i]);
      out.seq.lambdas.push_back(phase.run.seq.lambdas[i]);
    }
    // Potentials of improve steps that survived the trim in full.
    int64_t used = 0;
    for (size_t si = 0; si < phase.step_lengths.size(); ++si) {
      used += phase.step_lengths[si];
      if (used > flips_kept) break;
      if (si < phase.run.seq.vals.size()) out.seq.vals.push_back(phase.run.seq.vals[si]);
    }
    ++p;
  }
  return out;
}

FlipRun decompose_path_flip(const Orientation& d, const std::vector<EdgeId>& path_edges, int k) {
  if (k < 0) fail(Errc::not_k_connected, "negative k");
  if (!is_k_edge_connected(d, k + 1)) fail(Errc::not_k_plus_1_connected, "need lambda >= k+1");

  if (!path_edges.empty()) {
    for (EdgeId e : path_edges)
      if (e < 0 || e >= d.m()) fail(Errc::edge_out_of_range, "edge id " + std::to_string(e));
    std::vector<VertexId> verts{d.tail(path_edges[0])};
    for (size_t i = 0; i < path_edges.size(); ++i) {
      if (d.tail(path_edges[i]) != verts.back()) fail(Errc::not_a_path, "arcs do not chain");
      verts.push_back(d.head(path_edges[i]));
    }
    const bool closed = verts.front() == verts.back();
    std::vector<VertexId> interior(verts.begin(), closed ? verts.end() - 1 : verts.end());
    std::sort(interior.begin(), interior.end());
    if (std::adjacent_find(interior.begin(), interior.end()) != interior.end())
      fail(Errc::not_a_path, "walk revisits a vertex");
  }

  FlipRun out{FlipSequence{}, d};
  for (EdgeId e : path_edges) {
    out.result.flip_in_place(e);
    int lam = lambda_directed(out.result);
    if (lam < k) fail(Errc::internal_invariant_violated, "intermediate lost k-edge-connectivity");
    out.seq.flips.push_back(e);
    out.seq.lambdas.push_back(lam);
  }
  return out;
}

FlipSequence reconfigure_k(const Orientation& d1, const Orientation& d2, int k,
                           const ReconfigureOptions& opts) {
  if (*d1.graph != *d2.graph) fail(Errc::graph_mismatch, "orientations of different graphs");
  if (!is_k_edge_connected(d1, k) || !is_k_edge_connected(d2, k))
    fail(Errc::not_k_connected, "input orientation below k");
  if (d1 == d2) return {};

  if (k <= 0) {
    // Unconstrained: flip the disagreement directly.
    FlipSequence seq;
    Orientation cur = d1;
    for (EdgeId e : diff(d1, d2)) {
      cur.flip_in_place(e);
      seq.flips.push_back(e);
      seq.lambdas.push_back(lambda_directed(cur));
    }
    return seq;
  }

  if (k == 1 && !opts.force_pipeline) return reconfigure_strong(d1, d2);

  if (lambda_undirected(*d1.graph) < 2 * k + 2)
    fail(Errc::underlying_connectivity_too_low,
         "underlying graph is not " + std::to_string(2 * k + 2) + "-edge-connected");

  FlipRun up1 = augment_connectivity(d1, k);
  FlipRun up2 = augment_connectivity(d2, k);
  std::vector<EdgeId> middle = middle_bfs(up1.result, up2.result, k, opts.middle_node_cap);

  FlipSequence seq = up1.seq;
  Orientation cur = up1.result;
  auto apply = [&](EdgeId e) {
    cur.flip_in_place(e);
    seq.flips.push_back(e);
    int lam = lambda_directed(cur);
    if (lam < k) fail(Errc::internal_invariant_violated, "intermediate lost k-edge-connectivity");
    seq.lambdas.push_back(lam);
  };
  for (EdgeId e : middle) apply(e);
  for (auto it = up2.seq.flips.rbegin(); it != up2.seq.flips.rend(); ++it) apply(*it);
  if (!(cur == d2)) fail(Errc::internal_invariant_violated, "sequence does not end at the target");
  return seq;
}

}  // namespace orientflip
