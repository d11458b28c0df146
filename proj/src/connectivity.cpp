#include "digsat/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace digsat {

namespace {

// Dense flow network over the split nodes (2w = in-copy, 2w+1 = out-copy).
// Sized for small digraphs; the augmenting-path count is at most n, so
// Edmonds-Karp is plenty. The workspace is reused across calls.
struct FlowScratch {
  int nodes = 0;
  std::vector<int> head;       // adjacency: head[v] -> first edge index
  std::vector<int> next_edge;
  std::vector<int> edge_to;
  std::vector<int> edge_cap;
  std::vector<int> parent_edge;
  std::vector<int> bfs_queue;

  void reset(int node_count, int edge_estimate) {
    nodes = node_count;
    head.assign(node_count, -1);
    next_edge.clear();
    edge_to.clear();
    edge_cap.clear();
    next_edge.reserve(edge_estimate * 2);
    edge_to.reserve(edge_estimate * 2);
    edge_cap.reserve(edge_estimate * 2);
  }

  void add_edge(int a, int b, int cap) {
    edge_to.push_back(b);
    edge_cap.push_back(cap);
    next_edge.push_back(head[a]);
    head[a] = static_cast<int>(edge_to.size()) - 1;
    edge_to.push_back(a);
    edge_cap.push_back(0);
    next_edge.push_back(head[b]);
    head[b] = static_cast<int>(edge_to.size()) - 1;
  }

  // Shortest augmenting paths until `limit` flow is reached or no path left.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
      parent_edge.assign(nodes, -1);
      bfs_queue.clear();
      bfs_queue.push_back(s);
      parent_edge[s] = -2;
      bool reached = false;
      for (std::size_t qi = 0; qi < bfs_queue.size() && !reached; ++qi) {
        int a = bfs_queue[qi];
        for (int e = head[a]; e != -1; e = next_edge[e]) {
          int b = edge_to[e];
          if (edge_cap[e] > 0 && parent_edge[b] == -1) {
            parent_edge[b] = e;
            if (b == t) {
              reached = true;
              break;
            }
            bfs_queue.push_back(b);
          }
        }
      }
      if (!reached) break;
      int bottleneck = std::numeric_limits<int>::max();
      for (int b = t; b != s;) {
        int e = parent_edge[b];
        bottleneck = std::min(bottleneck, edge_cap[e]);
        b = edge_to[e ^ 1];
      }
      for (int b = t; b != s;) {
        int e = parent_edge[b];
        edge_cap[e] -= bottleneck;
        edge_cap[e ^ 1] += bottleneck;
        b = edge_to[e ^ 1];
      }
      flow += bottleneck;
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) {
    std::vector<char> seen(nodes, 0);
    bfs_queue.clear();
    bfs_queue.push_back(s);
    seen[s] = 1;
    for (std::size_t qi = 0; qi < bfs_queue.size(); ++qi) {
      int a = bfs_queue[qi];
      for (int e = head[a]; e != -1; e = next_edge[e]) {
        int b = edge_to[e];
        if (edge_cap[e] > 0 && !seen[b]) {
          seen[b] = 1;
          bfs_queue.push_back(b);
        }
      }
    }
    return seen;
  }
};

thread_local FlowScratch g_flow;

void build_split_network(const Digraph& d, int u, int v, FlowScratch& f) {
  int n = d.order();
  f.reset(2 * n, n * (n + 1));
  for (int w = 0; w < n; ++w)
    if (w != u && w != v) f.add_edge(2 * w, 2 * w + 1, 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && d.has_arc(a, b))
        f.add_edge(2 * a + 1, 2 * b, (a == u && b == v) ? 1 : n);
}

int pair_flow(const Digraph& d, int u, int v, int limit) {
  build_split_network(d, u, v, g_flow);
  return g_flow.max_flow(2 * u + 1, 2 * v, limit);
}

void check_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) throw std::invalid_argument("vertex out of range");
}

// Tarjan over the vertex subset implied by d (whole digraph).
struct TarjanState {
  const Digraph& d;
  std::vector<int> index, low, stack, comp;
  std::vector<char> on_stack;
  int counter = 0, comp_count = 0;

  explicit TarjanState(const Digraph& dg)
      : d(dg), index(dg.order(), -1), low(dg.order(), 0), comp(dg.order(), -1),
        on_stack(dg.order(), 0) {}

  void visit(int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < d.order(); ++w) {
      if (w == v || !d.has_arc(v, w)) continue;
      if (index[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = comp_count;
        if (w == v) break;
      }
      ++comp_count;
    }
  }
};

}  // namespace

SccDecomposition strong_components(const Digraph& d) {
  int n = d.order();
  if (n < 1) throw std::invalid_argument("strong_components requires n >= 1");
  TarjanState t(d);
  for (int v = 0; v < n; ++v)
    if (t.index[v] == -1) t.visit(v);

  std::vector<std::vector<int>> raw(t.comp_count);
  for (int v = 0; v < n; ++v) raw[t.comp[v]].push_back(v);  // ascending per component

  // Condensation edges, then Kahn's algorithm taking the ready component
  // with the smallest contained vertex first.
  std::vector<int> indeg(t.comp_count, 0);
  std::vector<std::vector<char>> edge(t.comp_count, std::vector<char>(t.comp_count, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && d.has_arc(u, v) && t.comp[u] != t.comp[v] && !edge[t.comp[u]][t.comp[v]]) {
        edge[t.comp[u]][t.comp[v]] = 1;
        ++indeg[t.comp[v]];
      }

  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
  for (int c = 0; c < t.comp_count; ++c)
    if (indeg[c] == 0) ready.push({raw[c][0], c});

  SccDecomposition out;
  out.component_of.assign(n, -1);
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    int idx = static_cast<int>(out.components.size());
    for (int v : raw[c]) out.component_of[v] = idx;
    out.components.push_back(std::move(raw[c]));
    for (int b = 0; b < t.comp_count; ++b)
      if (edge[c][b] && --indeg[b] == 0) ready.push({raw[b][0], b});
  }
  return out;
}

bool is_strongly_connected(const Digraph& d) {
  int n = d.order();
  if (n < 1) throw std::invalid_argument("is_strongly_connected requires n >= 1");
  if (n == 1) return true;
  if (n > 64) {
    return strong_components(d).components.size() == 1;
  }
  // Mask-based closure from vertex 0, forward and backward.
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (int dir = 0; dir < 2; ++dir) {
    std::uint64_t reach = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= dir == 0 ? d.out_mask(v) : d.in_mask(v);
      }
      frontier = next & ~reach;
      reach |= frontier;
    }
    if (reach != all) return false;
  }
  return true;
}

int local_connectivity(const Digraph& d, int u, int v) {
  check_vertex(d, u);
  check_vertex(d, v);
  if (u == v) throw std::invalid_argument("local_connectivity requires u != v");
  return pair_flow(d, u, v, std::numeric_limits<int>::max());
}

namespace detail {

KappaScan kappa_scan(const Digraph& d, int bound) {
  int n = d.order();
  if (n < 1) throw std::invalid_argument("kappa requires n >= 1");
  if (bound < 1) throw std::invalid_argument("kappa_scan bound must be >= 1");
  KappaScan scan;
  if (d.arc_count() == n * (n - 1)) {
    scan.value = std::min(n - 1, bound);
    scan.at_least_bound = n - 1 >= bound;
    return scan;
  }
  int best = bound;
  std::optional<std::pair<int, int>> best_pair;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      int f = pair_flow(d, u, v, best);
      // Flows are capped at the running best, so only strict improvements
      // are exact values; the first pair reaching the final minimum sticks.
      if (f < best) {
        best = f;
        best_pair = {u, v};
        if (best == 0) break;
      }
    }
    if (best == 0) break;
  }
  scan.value = best;
  scan.at_least_bound = !best_pair.has_value();
  scan.pair = best_pair;
  return scan;
}

std::vector<int> min_cut_for_pair(const Digraph& d, int u, int v) {
  int flow = pair_flow(d, u, v, std::numeric_limits<int>::max());
  std::vector<char> reach = g_flow.residual_reachable(2 * u + 1);
  std::vector<int> cut;
  for (int w = 0; w < d.order(); ++w)
    if (w != u && w != v && reach[2 * w] && !reach[2 * w + 1]) cut.push_back(w);
  if (static_cast<int>(cut.size()) != flow)
    throw std::logic_error("min cut size does not match flow value");
  return cut;
}

}  // namespace detail

int kappa(const Digraph& d) {
  // bound n never truncates: non-adjacent pairs have local connectivity
  // <= n-2, and the complete case is handled inside the scan.
  return detail::kappa_scan(d, std::max(1, d.order())).value;
}

bool kappa_at_least(const Digraph& d, int bound) {
  if (bound <= 0) return true;
  detail::KappaScan scan = detail::kappa_scan(d, bound);
  return scan.at_least_bound;
}

std::vector<int> min_separator(const Digraph& d) {
  int n = d.order();
  if (n < 1) throw std::invalid_argument("min_separator requires n >= 1");
  if (d.arc_count() == n * (n - 1)) {
    // Convention: a complete digraph is separated only into triviality.
    std::vector<int> s(n - 1);
    for (int i = 0; i < n - 1; ++i) s[i] = i;
    return s;
  }
  detail::KappaScan scan = detail::kappa_scan(d, n);
  return detail::min_cut_for_pair(d, scan.pair->first, scan.pair->second);
}

Separation separation(const Digraph& d, const std::vector<int>& s) {
  int n = d.order();
  std::vector<int> sep = s;
  std::sort(sep.begin(), sep.end());
  for (std::size_t i = 0; i < sep.size(); ++i) {
    if (sep[i] < 0 || sep[i] >= n) throw std::invalid_argument("separator vertex out of range");
    if (i > 0 && sep[i] == sep[i - 1]) throw std::invalid_argument("duplicate separator vertex");
  }
  std::vector<int> rest;
  {
    std::vector<char> in_sep(n, 0);
    for (int v : sep) in_sep[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_sep[v]) rest.push_back(v);
  }
  if (rest.empty()) throw std::invalid_argument("separator must leave at least one vertex");

  Digraph rest_graph = d.induced(rest);
  SccDecomposition sub = strong_components(rest_graph);
  bool trivial = rest.size() == 1;
  if (!trivial && sub.components.size() < 2)
    throw std::invalid_argument("not a separator: D-S is strongly connected and non-trivial");

  Separation out;
  out.separator = sep;
  for (const std::vector<int>& comp : sub.components) {
    std::vector<int> orig;
    orig.reserve(comp.size());
    for (int v : comp) orig.push_back(rest[v]);
    out.components.push_back(orig);

    std::vector<int> lobe_vertices = sep;
    lobe_vertices.insert(lobe_vertices.end(), orig.begin(), orig.end());
    std::sort(lobe_vertices.begin(), lobe_vertices.end());
    out.lobes.push_back({d.induced(lobe_vertices), lobe_vertices});
  }
  out.source_lobe_index = 0;

  std::vector<int> rest_vertices;
  {
    const std::vector<int>& b1 = out.components.front();
    std::vector<char> in_b1(n, 0);
    for (int v : b1) in_b1[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_b1[v]) rest_vertices.push_back(v);
  }
  out.rest_block = {d.induced(rest_vertices), rest_vertices};
  return out;
}

}  // namespace digsat
