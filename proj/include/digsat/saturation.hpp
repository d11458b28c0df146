#pragma once

#include <map>
#include <vector>

#include "digsat/digraph.hpp"

namespace digsat {

// Verdict of the saturation predicate for threshold k: the digraph is
// saturated iff it is free of k-strong subdigraphs and every missing arc
// would create one. violating_arcs lists the missing arcs whose addition
// still leaves the digraph free; witness_for caches, per missing arc that
// does create a k-strong subdigraph, one witness vertex set.
struct SaturationReport {
  int k = 0;
  bool free = false;
  ArcList violating_arcs;
  bool verdict = false;
  std::map<Arc, std::vector<int>> witness_for;
};

SaturationReport is_saturated(const Digraph& d, int k);

// Same verdict without report assembly; the per-arc scan exits on the first
// violation. Used in enumeration loops.
bool is_saturated_verdict(const Digraph& d, int k);

// Greedy completion: repeatedly add, in the given order (passes repeat until
// a fixpoint), any missing arc whose addition keeps the digraph free of
// k-strong subdigraphs. The result is saturated and a supergraph of d.
// Throws if d already contains a k-strong subdigraph.
Digraph saturate(const Digraph& d, int k);
Digraph saturate(const Digraph& d, int k, const ArcList& order);

}  // namespace digsat
