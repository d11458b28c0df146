#pragma once

#include <optional>
#include <vector>

#include "digsat/digraph.hpp"

namespace digsat {

struct DetectionResult {
  bool contains = false;
  // Vertex set W with kappa(induced(d, W)) >= k; present iff contains.
  std::optional<std::vector<int>> witness;
};

// Does d contain a k-strongly connected subdigraph? Since adding arcs never
// creates a separator, it suffices to look at induced subdigraphs, and a
// witness cannot straddle a separator of size < k. That gives the recursion:
//   - n <= k: no (k-strong digraphs need at least k+1 vertices)
//   - kappa(d) >= k: yes, witness V(d)
//   - otherwise recurse into the S-lobes of the deterministic minimum
//     separator; among successful lobes the lexicographically smallest
//     witness is kept.
DetectionResult contains_k_strong(const Digraph& d, int k);

// Exhaustive cross-check: scans every vertex subset of size >= k+1.
// Guarded at n <= 8 unless allow_large.
bool contains_k_strong_bruteforce(const Digraph& d, int k, bool allow_large = false);

}  // namespace digsat
