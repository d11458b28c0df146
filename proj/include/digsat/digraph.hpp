#pragma once

#include <cstdint>
#include <vector>

namespace digsat {

struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

using ArcList = std::vector<Arc>;

struct DigraphClass {
  bool is_complete = false;
  bool is_tournament = false;
  bool is_acyclic_tournament = false;
};

// Strict labeled digraph on vertices 0..n-1, no loops, no parallel arcs.
// Arc presence lives in a bit matrix indexed row-major with the diagonal
// skipped: pair (u,v) maps to bit u*(n-1) + (v < u ? v : v-1). For
// n*(n-1) <= 64 the whole digraph fits into one word, so the numeric
// encoding doubles as an enumeration index.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  // Rebuilds a digraph from its bit encoding; requires n*(n-1) <= 64.
  static Digraph from_encoding(int n, std::uint64_t bits);

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }

  bool has_arc(int u, int v) const;
  void add_arc(int u, int v);     // idempotent; rejects loops and bad vertices
  void remove_arc(int u, int v);  // idempotent
  Digraph plus_arc(int u, int v) const;

  // Arcs in ascending (from, to) order.
  ArcList arcs() const;
  // Ordered non-loop pairs absent from the digraph, ascending.
  ArcList complement_arcs() const;

  // Subdigraph induced by the vertices in `w`, relabeled 0..|w|-1 by
  // ascending original label.
  Digraph induced(const std::vector<int>& w) const;

  int out_degree(int v) const;
  int in_degree(int v) const;
  // |N+(v) ∩ N-(v)|: number of vertices joined to v in both directions.
  int reciprocal_degree(int v) const;
  int min_reciprocal_degree() const;

  // Successor/predecessor sets as vertex bit masks; requires n <= 64.
  std::uint64_t out_mask(int v) const;
  std::uint64_t in_mask(int v) const;

  DigraphClass classify() const;

  std::uint64_t encoding() const;  // requires n*(n-1) <= 64

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int pair_index(int u, int v) const { return u * (n_ - 1) + (v < u ? v : v - 1); }
  void check_pair(int u, int v) const;

  int n_ = 0;
  int arc_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace digsat
