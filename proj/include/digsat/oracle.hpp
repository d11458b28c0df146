#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "digsat/digraph.hpp"

namespace digsat {

// Minimum adjacency encoding over all vertex relabelings; equal forms mean
// isomorphic digraphs. Factorial scan, guarded at n <= 8.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Digraph& d);

// 2^(n(n-1)) for n <= 5 (full enumeration ceiling), or with allow_large up
// to n = 6.
std::uint64_t total_digraphs(int n, bool allow_large = false);

// Visits labeled digraphs with encodings in [lo, hi) in ascending order.
void for_each_digraph(int n, std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(const Digraph&, std::uint64_t)>& fn,
                      bool allow_large = false);

struct OracleOptions {
  int jobs = 1;
  bool canonical = false;       // also count saturated isomorphism classes
  bool allow_large = false;     // permit n = 6 (sampling mode)
  std::uint64_t sample_count = 200000;  // sample size used when n = 6
  std::uint64_t seed = 1;               // sampling seed
  bool collect_saturated = false;       // keep every saturated encoding
  // Called with (done, total) as chunks finish; may run on worker threads
  // (serialized by an internal lock).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct OracleResult {
  int n = 0;
  int k = 0;
  bool exhaustive = true;  // false for the sampled n = 6 mode
  std::uint64_t enumerated_total = 0;
  std::uint64_t labeled_saturated_count = 0;
  std::optional<std::uint64_t> canonical_saturated_count;
  std::optional<int> sat;  // min arcs over saturated digraphs
  std::optional<int> ex;   // max arcs over saturated digraphs
  std::optional<Digraph> min_witness;
  std::optional<Digraph> max_witness;
  std::uint64_t min_witness_index = 0;
  std::uint64_t max_witness_index = 0;
  double elapsed_seconds = 0.0;
  std::vector<std::uint64_t> saturated_encodings;  // when collect_saturated
};

// Exhaustive sat/ex computation: enumerates labeled digraphs, filters
// through the saturation predicate, and aggregates min/max arc counts with
// witnesses. Ties go to the smallest enumeration index, and results are
// identical for any worker count.
OracleResult oracle_sat_ex(int n, int k, const OracleOptions& options = {});

struct AuditFailure {
  std::uint64_t encoding = 0;
  std::string check;   // "kappa" or "tpartite"
  std::string detail;
};

struct AuditReport {
  std::uint64_t digraphs_checked = 0;
  std::uint64_t separators_checked = 0;
  std::vector<AuditFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Structural audit of saturated digraphs with n >= k+1: kappa must be k-1,
// and for every minimum separator found by scanning all (k-1)-subsets, the
// strong components of D-S must be joined by all forward arcs and no
// backward ones.
AuditReport audit_structure(const std::vector<Digraph>& saturated, int k);
AuditReport audit_structure_encodings(int n, const std::vector<std::uint64_t>& encodings, int k);

}  // namespace digsat
