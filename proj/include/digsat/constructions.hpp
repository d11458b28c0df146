#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "digsat/digraph.hpp"

namespace digsat {

enum class Orientation { out, in };

// One growth step of a directed c-tree: the new vertex gets arcs in both
// directions to a c-clique of the current digraph and a single arc to (out)
// or from (in) every other existing vertex.
struct KTreeStep {
  std::vector<int> clique;  // c existing vertices, sorted
  Orientation orientation = Orientation::out;
};

// A deterministic recipe for one directed c-tree on n vertices: start from
// the complete digraph on vertices 0..c-1, then apply steps for vertices
// c..n-1 in order.
struct KTreePlan {
  int c = 1;
  int n = 1;
  std::vector<KTreeStep> steps;  // size n - c
};

// Builds the digraph a plan describes, validating clique choices step by
// step. Vertex i is the (i+1)-th constructed vertex.
Digraph ktree(const KTreePlan& plan);

// Samples a valid plan: at each step a uniformly random c-clique from the
// registry of all c-cliques of the current digraph, plus a random
// orientation. Deterministic for a fixed seed.
std::pair<KTreePlan, Digraph> ktree_random(int c, int n, std::uint64_t seed);

// Layered family parameters: n = t(k-1) + r with 0 <= r < k-1. Parts are
// laid out V0 first (the transitive-tournament hub), then V1..Vt.
struct DuSpec {
  int n = 0;
  int k = 0;
  int t = 0;
  int r = 0;

  static DuSpec make(int n, int k);  // requires k >= 2, n >= 2(k-1)
  int part_size(int i) const { return i < t ? k - 1 : r; }
  int part_start(int i) const { return i == 0 ? 0 : (k - 1) + (i - 1) * (k - 1); }
  int part_count() const { return t + 1; }
};

// The layered construction: V0 carries a transitive tournament oriented by
// vertex index, every Vi (i >= 1) is a complete digraph, V0 is joined in
// both directions to everything else, parts Vi -> Vj for 1 <= i < j carry
// all forward arcs, and there are no other arcs.
Digraph du(int n, int k);

// Transitive tournament with arcs (u,v) for u < v.
Digraph acyclic_tournament(int n);

// One peel of the recognizer: `vertex` had reciprocal degree c with clique
// reciprocal neighborhood and one same-direction arc per remaining vertex.
struct PeelStep {
  int vertex = 0;
  std::vector<int> clique;  // original labels, sorted
  Orientation orientation = Orientation::out;
};

struct CTreeRecognition {
  bool member = false;
  int c = 0;
  std::vector<int> base;        // remaining vertices, valid when member
  std::vector<PeelStep> peels;  // in peel order (first peeled first)

  // Replays the trace forward as a construction plan. The relabeling puts
  // the base first (ascending), then the peeled vertices last-peeled first;
  // construction_order[i] is the original label of plan vertex i.
  KTreePlan to_plan(std::vector<int>& construction_order) const;
};

// Greedy membership test for directed c-trees: repeatedly peel the
// smallest-index vertex whose incident arcs match a construction step,
// accept iff the base is the complete digraph on c vertices. Peeling any
// qualifying vertex preserves membership, so greedy choice is safe.
CTreeRecognition is_directed_ctree(const Digraph& d, int c);

}  // namespace digsat
