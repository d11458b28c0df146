#include "digsat/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace digsat {

namespace {

bool induces_clique(const Digraph& d, const std::vector<int>& w) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (!d.has_arc(w[a], w[b]) || !d.has_arc(w[b], w[a])) return false;
  return true;
}

void apply_step(Digraph& d, int new_vertex, const KTreeStep& step, int c) {
  if (static_cast<int>(step.clique.size()) != c)
    throw std::invalid_argument("ktree step " + std::to_string(new_vertex - c) +
                                ": clique must have exactly c vertices");
  std::vector<int> clique = step.clique;
  std::sort(clique.begin(), clique.end());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] < 0 || clique[i] >= new_vertex)
      throw std::invalid_argument("ktree step " + std::to_string(new_vertex - c) +
                                  ": clique vertex not yet constructed");
    if (i > 0 && clique[i] == clique[i - 1])
      throw std::invalid_argument("ktree step " + std::to_string(new_vertex - c) +
                                  ": duplicate clique vertex");
  }
  if (!induces_clique(d, clique))
    throw std::invalid_argument("ktree step " + std::to_string(new_vertex - c) +
                                ": chosen vertices do not induce a complete digraph");
  std::vector<char> in_clique(new_vertex, 0);
  for (int v : clique) in_clique[v] = 1;
  for (int v : clique) {
    d.add_arc(new_vertex, v);
    d.add_arc(v, new_vertex);
  }
  for (int v = 0; v < new_vertex; ++v) {
    if (in_clique[v]) continue;
    if (step.orientation == Orientation::out)
      d.add_arc(new_vertex, v);
    else
      d.add_arc(v, new_vertex);
  }
}

}  // namespace

Digraph ktree(const KTreePlan& plan) {
  if (plan.c < 1) throw std::invalid_argument("ktree requires c >= 1");
  if (plan.n < plan.c) throw std::invalid_argument("ktree requires n >= c");
  if (static_cast<int>(plan.steps.size()) != plan.n - plan.c)
    throw std::invalid_argument("ktree plan must have n - c steps");
  Digraph d(plan.n);
  for (int u = 0; u < plan.c; ++u)
    for (int v = 0; v < plan.c; ++v)
      if (u != v) d.add_arc(u, v);
  for (int i = plan.c; i < plan.n; ++i) apply_step(d, i, plan.steps[i - plan.c], plan.c);
  return d;
}

std::pair<KTreePlan, Digraph> ktree_random(int c, int n, std::uint64_t seed) {
  if (c < 1 || n < c) throw std::invalid_argument("ktree_random requires n >= c >= 1");
  std::mt19937_64 rng(seed);
  KTreePlan plan{c, n, {}};
  Digraph d(n);
  for (int u = 0; u < c; ++u)
    for (int v = 0; v < c; ++v)
      if (u != v) d.add_arc(u, v);

  // Registry of every c-clique of the digraph built so far. Adding vertex v
  // bidirectionally joined to clique K creates exactly the new c-cliques
  // (K \ {x}) ∪ {v}: any clique containing v lies inside v's reciprocal
  // neighborhood, which is K.
  std::vector<std::vector<int>> cliques;
  {
    std::vector<int> base(c);
    for (int i = 0; i < c; ++i) base[i] = i;
    cliques.push_back(base);
  }
  for (int v = c; v < n; ++v) {
    std::size_t pick = static_cast<std::size_t>(rng() % cliques.size());
    std::vector<int> clique = cliques[pick];
    Orientation orient = (rng() & 1) ? Orientation::in : Orientation::out;
    KTreeStep step{clique, orient};
    apply_step(d, v, step, c);
    plan.steps.push_back(std::move(step));
    for (std::size_t drop = 0; drop < clique.size(); ++drop) {
      std::vector<int> next;
      next.reserve(clique.size());
      for (std::size_t i = 0; i < clique.size(); ++i)
        if (i != drop) next.push_back(clique[i]);
      next.push_back(v);  // v is the largest label so far, order stays sorted
      cliques.push_back(std::move(next));
    }
  }
  return {std::move(plan), std::move(d)};
}

DuSpec DuSpec::make(int n, int k) {
  if (k < 2) throw std::invalid_argument("layered family requires k >= 2");
  if (n < 2 * (k - 1)) throw std::invalid_argument("layered family requires n >= 2(k-1)");
  DuSpec spec;
  spec.n = n;
  spec.k = k;
  spec.t = n / (k - 1);
  spec.r = n % (k - 1);
  return spec;
}

Digraph du(int n, int k) {
  DuSpec spec = DuSpec::make(n, k);
  Digraph d(n);
  int hub = k - 1;  // |V0|
  for (int u = 0; u < hub; ++u)
    for (int v = u + 1; v < hub; ++v) d.add_arc(u, v);
  for (int u = 0; u < hub; ++u)
    for (int v = hub; v < n; ++v) {
      d.add_arc(u, v);
      d.add_arc(v, u);
    }
  for (int i = 1; i < spec.part_count(); ++i) {
    int s = spec.part_start(i), len = spec.part_size(i);
    for (int u = s; u < s + len; ++u)
      for (int v = s; v < s + len; ++v)
        if (u != v) d.add_arc(u, v);
    for (int j = i + 1; j < spec.part_count(); ++j) {
      int s2 = spec.part_start(j), len2 = spec.part_size(j);
      for (int u = s; u < s + len; ++u)
        for (int v = s2; v < s2 + len2; ++v) d.add_arc(u, v);
    }
  }
  return d;
}

Digraph acyclic_tournament(int n) {
  if (n < 1) throw std::invalid_argument("acyclic_tournament requires n >= 1");
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

namespace {

// A vertex qualifies for peeling when its alive-neighborhood looks exactly
// like the last construction step: reciprocal degree c with a clique
// reciprocal neighborhood, and one arc per remaining alive vertex, all
// oriented the same way.
bool qualifies(const Digraph& d, const std::vector<int>& alive, int v, int c, PeelStep& step) {
  std::vector<int> recip;
  std::vector<int> others;
  for (int u : alive) {
    if (u == v) continue;
    bool fwd = d.has_arc(v, u), bwd = d.has_arc(u, v);
    if (fwd && bwd)
      recip.push_back(u);
    else
      others.push_back(u);
  }
  if (static_cast<int>(recip.size()) != c) return false;
  if (!induces_clique(d, recip)) return false;
  bool have_dir = false;
  bool dir_out = true;
  for (int u : others) {
    bool fwd = d.has_arc(v, u), bwd = d.has_arc(u, v);
    if (fwd == bwd) return false;  // non-adjacent pair (both false here)
    if (!have_dir) {
      have_dir = true;
      dir_out = fwd;
    } else if (fwd != dir_out) {
      return false;
    }
  }
  step.vertex = v;
  step.clique = recip;
  step.orientation = (!have_dir || dir_out) ? Orientation::out : Orientation::in;
  return true;
}

}  // namespace

CTreeRecognition is_directed_ctree(const Digraph& d, int c) {
  if (c < 1) throw std::invalid_argument("is_directed_ctree requires c >= 1");
  CTreeRecognition res;
  res.c = c;
  if (d.order() < c) return res;
  std::vector<int> alive(d.order());
  for (int v = 0; v < d.order(); ++v) alive[v] = v;
  while (static_cast<int>(alive.size()) > c) {
    bool peeled = false;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      PeelStep step;
      if (qualifies(d, alive, alive[i], c, step)) {
        res.peels.push_back(std::move(step));
        alive.erase(alive.begin() + i);
        peeled = true;
        break;
      }
    }
    if (!peeled) return res;
  }
  if (!induces_clique(d, alive)) return res;
  res.member = true;
  res.base = alive;
  return res;
}

KTreePlan CTreeRecognition::to_plan(std::vector<int>& construction_order) const {
  if (!member) throw std::logic_error("to_plan requires a successful recognition");
  construction_order = base;
  for (auto it = peels.rbegin(); it != peels.rend(); ++it)
    construction_order.push_back(it->vertex);
  std::vector<int> new_label(construction_order.size());
  {
    std::vector<std::pair<int, int>> pairs;  // (original, new)
    for (std::size_t i = 0; i < construction_order.size(); ++i)
      pairs.push_back({construction_order[i], static_cast<int>(i)});
    std::sort(pairs.begin(), pairs.end());
    new_label.assign(pairs.back().first + 1, -1);
    for (auto& [orig, ni] : pairs) new_label[orig] = ni;
  }
  KTreePlan plan{c, static_cast<int>(construction_order.size()), {}};
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    KTreeStep step;
    step.orientation = it->orientation;
    for (int orig : it->clique) step.clique.push_back(new_label[orig]);
    std::sort(step.clique.begin(), step.clique.end());
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

}  // namespace digsat
