#include "digsat/saturation.hpp"

#include <stdexcept>

#include "digsat/detection.hpp"

namespace digsat {

SaturationReport is_saturated(const Digraph& d, int k) {
  if (k < 1) throw std::invalid_argument("is_saturated requires k >= 1");
  SaturationReport report;
  report.k = k;
  report.free = !contains_k_strong(d, k).contains;
  if (!report.free) {
    report.verdict = false;
    return report;
  }
  for (const Arc& e : d.complement_arcs()) {
    DetectionResult res = contains_k_strong(d.plus_arc(e.from, e.to), k);
    if (res.contains)
      report.witness_for.emplace(e, *res.witness);
    else
      report.violating_arcs.push_back(e);
  }
  report.verdict = report.violating_arcs.empty();
  return report;
}

bool is_saturated_verdict(const Digraph& d, int k) {
  if (k < 1) throw std::invalid_argument("is_saturated_verdict requires k >= 1");
  if (contains_k_strong(d, k).contains) return false;
  for (const Arc& e : d.complement_arcs())
    if (!contains_k_strong(d.plus_arc(e.from, e.to), k).contains) return false;
  return true;
}

Digraph saturate(const Digraph& d, int k) {
  return saturate(d, k, d.complement_arcs());
}

Digraph saturate(const Digraph& d, int k, const ArcList& order) {
  if (k < 1) throw std::invalid_argument("saturate requires k >= 1");
  if (contains_k_strong(d, k).contains)
    throw std::invalid_argument("saturate requires a digraph free of k-strong subdigraphs");
  Digraph cur = d;
  bool added = true;
  while (added) {
    added = false;
    for (const Arc& e : order) {
      if (cur.has_arc(e.from, e.to)) continue;
      Digraph next = cur.plus_arc(e.from, e.to);
      if (!contains_k_strong(next, k).contains) {
        cur = std::move(next);
        added = true;
      }
    }
  }
  return cur;
}

}  // namespace digsat
