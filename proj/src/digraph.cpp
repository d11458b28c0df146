#include "digsat/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace digsat {

namespace {
int bit_words(int n) {
  long long pairs = static_cast<long long>(n) * (n - 1);
  return static_cast<int>((pairs + 63) / 64);
}
}  // namespace

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("digraph order must be non-negative");
  bits_.assign(bit_words(n), 0);
}

Digraph Digraph::from_encoding(int n, std::uint64_t bits) {
  if (n < 0 || n * (n - 1) > 64)
    throw std::invalid_argument("encoding requires n*(n-1) <= 64");
  Digraph d(n);
  int pairs = n * (n - 1);
  if (pairs < 64 && (bits >> pairs) != 0)
    throw std::invalid_argument("encoding has bits beyond n*(n-1)");
  if (pairs > 0) {
    d.bits_[0] = bits;
    d.arc_count_ = std::popcount(bits);
  }
  return d;
}

void Digraph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range: (" + std::to_string(u) + "," +
                                std::to_string(v) + ") with n=" + std::to_string(n_));
  if (u == v) throw std::invalid_argument("loops are not allowed: (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
}

bool Digraph::has_arc(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  int i = pair_index(u, v);
  return (bits_[i >> 6] >> (i & 63)) & 1u;
}

void Digraph::add_arc(int u, int v) {
  check_pair(u, v);
  int i = pair_index(u, v);
  std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (!(bits_[i >> 6] & mask)) {
    bits_[i >> 6] |= mask;
    ++arc_count_;
  }
}

void Digraph::remove_arc(int u, int v) {
  check_pair(u, v);
  int i = pair_index(u, v);
  std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (bits_[i >> 6] & mask) {
    bits_[i >> 6] &= ~mask;
    --arc_count_;
  }
}

Digraph Digraph::plus_arc(int u, int v) const {
  Digraph d = *this;
  d.add_arc(u, v);
  return d;
}

ArcList Digraph::arcs() const {
  ArcList out;
  out.reserve(arc_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && has_arc(u, v)) out.push_back({u, v});
  return out;
}

ArcList Digraph::complement_arcs() const {
  ArcList out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) - arc_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (u != v && !has_arc(u, v)) out.push_back({u, v});
  return out;
}

Digraph Digraph::induced(const std::vector<int>& w) const {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n_)
      throw std::invalid_argument("induced: vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("induced: duplicate vertex");
  }
  Digraph d(static_cast<int>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b)
      if (a != b && has_arc(sorted[a], sorted[b]))
        d.add_arc(static_cast<int>(a), static_cast<int>(b));
  return d;
}

int Digraph::out_degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  int deg = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_arc(v, u)) ++deg;
  return deg;
}

int Digraph::in_degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  int deg = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_arc(u, v)) ++deg;
  return deg;
}

int Digraph::reciprocal_degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  int deg = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_arc(v, u) && has_arc(u, v)) ++deg;
  return deg;
}

int Digraph::min_reciprocal_degree() const {
  if (n_ == 0) throw std::invalid_argument("empty digraph has no minimum reciprocal degree");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, reciprocal_degree(v));
  return best;
}

std::uint64_t Digraph::out_mask(int v) const {
  if (n_ > 64) throw std::invalid_argument("vertex masks require n <= 64");
  std::uint64_t m = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_arc(v, u)) m |= std::uint64_t{1} << u;
  return m;
}

std::uint64_t Digraph::in_mask(int v) const {
  if (n_ > 64) throw std::invalid_argument("vertex masks require n <= 64");
  std::uint64_t m = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_arc(u, v)) m |= std::uint64_t{1} << u;
  return m;
}

DigraphClass Digraph::classify() const {
  DigraphClass c;
  c.is_complete = arc_count_ == n_ * (n_ - 1);
  c.is_tournament = true;
  for (int u = 0; u < n_ && c.is_tournament; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_arc(u, v) == has_arc(v, u)) {
        c.is_tournament = false;
        break;
      }
  c.is_acyclic_tournament = false;
  if (c.is_tournament) {
    // A tournament is transitive iff it has no directed triangle, which for
    // tournaments is equivalent to out-degrees being a permutation of 0..n-1.
    std::vector<char> seen(n_ + 1, 0);
    bool ok = true;
    for (int v = 0; v < n_; ++v) {
      int d = out_degree(v);
      if (seen[d]) {
        ok = false;
        break;
      }
      seen[d] = 1;
    }
    c.is_acyclic_tournament = ok;
  }
  return c;
}

std::uint64_t Digraph::encoding() const {
  if (n_ * (n_ - 1) > 64) throw std::invalid_argument("encoding requires n*(n-1) <= 64");
  return bits_.empty() ? 0 : bits_[0];
}

}  // namespace digsat
