#include "digsat/detection.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "digsat/connectivity.hpp"

namespace digsat {

namespace {

// Returns a witness over d's own labels, or nullopt.
std::optional<std::vector<int>> detect(const Digraph& d, int k) {
  int n = d.order();
  if (n <= k) return std::nullopt;
  detail::KappaScan scan = detail::kappa_scan(d, k);
  if (scan.at_least_bound) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  // kappa < k; scan.pair is the same pair min_separator picks, so the cut
  // below is exactly min_separator(d).
  std::vector<int> sep = detail::min_cut_for_pair(d, scan.pair->first, scan.pair->second);
  if (n - static_cast<int>(sep.size()) <= 1) return std::nullopt;

  Separation split = separation(d, sep);
  std::optional<std::vector<int>> best;
  for (const Lobe& lobe : split.lobes) {
    std::optional<std::vector<int>> sub = detect(lobe.graph, k);
    if (!sub) continue;
    std::vector<int> mapped;
    mapped.reserve(sub->size());
    for (int v : *sub) mapped.push_back(lobe.vertices[v]);
    std::sort(mapped.begin(), mapped.end());
    if (!best || mapped < *best) best = std::move(mapped);
  }
  return best;
}

}  // namespace

DetectionResult contains_k_strong(const Digraph& d, int k) {
  if (k < 1) throw std::invalid_argument("contains_k_strong requires k >= 1");
  DetectionResult res;
  res.witness = detect(d, k);
  res.contains = res.witness.has_value();
  return res;
}

bool contains_k_strong_bruteforce(const Digraph& d, int k, bool allow_large) {
  if (k < 1) throw std::invalid_argument("contains_k_strong_bruteforce requires k >= 1");
  int n = d.order();
  if (n > 8 && !allow_large)
    throw std::invalid_argument("exhaustive subset scan guarded at n <= 8");
  if (n > 30) throw std::invalid_argument("subset scan infeasible for n > 30");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) < k + 1) continue;
    std::vector<int> w;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) w.push_back(v);
    if (kappa(d.induced(w)) >= k) return true;
  }
  return false;
}

}  // namespace digsat
