#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "digsat/digraph.hpp"

// Independent brute-force oracles for cross-checking the library. These
// deliberately avoid the library's flow/recursion code paths: connectivity
// facts are recomputed from first principles by subset enumeration and
// plain reachability.
namespace oracle_check {

inline bool path_exists(const digsat::Digraph& d, int from, int to,
                        const std::vector<char>& removed) {
  if (removed[from] || removed[to]) return false;
  std::vector<char> seen(d.order(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w = 0; w < d.order(); ++w)
      if (w != v && !removed[w] && !seen[w] && d.has_arc(v, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

inline bool strongly_connected_without(const digsat::Digraph& d, const std::vector<char>& removed) {
  int first = -1, count = 0;
  for (int v = 0; v < d.order(); ++v)
    if (!removed[v]) {
      if (first < 0) first = v;
      ++count;
    }
  if (count <= 1) return true;
  for (int v = 0; v < d.order(); ++v) {
    if (removed[v] || v == first) continue;
    if (!path_exists(d, first, v, removed) || !path_exists(d, v, first, removed)) return false;
  }
  return true;
}

// Minimum size of a vertex set whose removal leaves a digraph that is not
// strongly connected or has at most one vertex. This is kappa by definition.
inline int kappa_bruteforce(const digsat::Digraph& d) {
  int n = d.order();
  int best = n;  // sentinel; some subset always works (remove all but one)
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<char> removed(n, 0);
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) {
        removed[v] = 1;
        ++size;
      }
    if (size >= best || size >= n) continue;
    int left = n - size;
    bool trivial = left <= 1;
    if (trivial || !strongly_connected_without(d, removed)) best = size;
  }
  return best;
}

// Minimum number of vertices (outside {u,v}) destroying every (u,v)-dipath.
// By Menger this equals the max internally-disjoint dipath count for
// non-adjacent pairs.
inline int min_vertex_cut_bruteforce(const digsat::Digraph& d, int u, int v) {
  int n = d.order();
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (mask >> u & 1 || mask >> v & 1) continue;
    std::vector<char> removed(n, 0);
    int size = 0;
    for (int w = 0; w < n; ++w)
      if (mask >> w & 1) {
        removed[w] = 1;
        ++size;
      }
    if (size >= best) continue;
    if (!path_exists(d, u, v, removed)) best = size;
  }
  return best;
}

// Seeded random digraph with the given arc probability (per mille).
inline digsat::Digraph random_digraph(std::mt19937_64& rng, int n, int permille) {
  digsat::Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && static_cast<int>(rng() % 1000) < permille) d.add_arc(u, v);
  return d;
}

}  // namespace oracle_check
