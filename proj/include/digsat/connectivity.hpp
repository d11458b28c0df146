#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "digsat/digraph.hpp"

namespace digsat {

// Strong components in acyclic order: for i < j there is no arc from
// components[j] back to components[i]. The order is the unique topological
// order of the condensation with ties broken by smallest contained vertex;
// each component lists its vertices ascending.
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // vertex -> index into components
};

SccDecomposition strong_components(const Digraph& d);

// True for the trivial one-vertex digraph.
bool is_strongly_connected(const Digraph& d);

// Maximum number of internally vertex-disjoint (u,v)-dipaths, computed by
// max-flow on the split network: every vertex w other than u,v becomes
// w_in -> w_out with capacity 1, an arc (a,b) becomes a_out -> b_in with
// capacity n (the direct arc (u,v), when present, carries capacity 1 since
// it is a dipath of its own and cannot be reused).
int local_connectivity(const Digraph& d, int u, int v);

// Vertex-strong connectivity. Complete digraphs have kappa = n-1 (removing
// any n-1 vertices leaves a trivial digraph); otherwise the minimum of
// local_connectivity over ordered non-adjacent pairs.
int kappa(const Digraph& d);

// kappa(d) >= bound, without always computing kappa exactly.
bool kappa_at_least(const Digraph& d, int bound);

// A minimum separator. Deterministic: for a complete digraph, vertices
// 0..n-2 by convention; otherwise the max-flow min-cut of the
// lexicographically first ordered non-adjacent pair (u,v) with
// local_connectivity(u,v) == kappa(d), where the cut consists of the split
// vertices whose in-node is reachable from the source in the final residual
// network and whose out-node is not.
std::vector<int> min_separator(const Digraph& d);

// An S-lobe D[S ∪ B] for a strong component B of D-S, with the map from
// lobe labels back to the original vertices.
struct Lobe {
  Digraph graph;
  std::vector<int> vertices;  // lobe label -> original label, ascending
};

struct Separation {
  std::vector<int> separator;              // sorted
  std::vector<std::vector<int>> components;  // strong components of D-S, acyclic order
  std::vector<Lobe> lobes;                 // one per component, same order
  int source_lobe_index = 0;

  // Two-block form: D1 = D[S ∪ B1] and D2 = D - V(B1).
  const Lobe& block_d1() const { return lobes[source_lobe_index]; }
  const Lobe& block_d2() const { return rest_block; }

  Lobe rest_block;
};

// Splits D along a separator S. Throws if S is not a separator (D-S must be
// either not strongly connected or a single vertex).
Separation separation(const Digraph& d, const std::vector<int>& s);

namespace detail {

// One pass over ordered non-adjacent pairs with per-pair flows capped at
// `bound`. If every pair reaches the cap, kappa >= bound. Otherwise kappa is
// exact and `pair` is the lexicographically first pair attaining it.
struct KappaScan {
  int value = 0;        // exact kappa, or bound when at_least_bound
  bool at_least_bound = false;
  std::optional<std::pair<int, int>> pair;
};

KappaScan kappa_scan(const Digraph& d, int bound);

// Min cut for one non-adjacent pair via residual reachability after a full
// max-flow run; this is exactly the cut min_separator returns.
std::vector<int> min_cut_for_pair(const Digraph& d, int u, int v);

}  // namespace detail

}  // namespace digsat
