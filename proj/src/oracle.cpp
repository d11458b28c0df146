#include "digsat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "digsat/connectivity.hpp"
#include "digsat/saturation.hpp"

namespace digsat {

CanonicalForm canonical_form(const Digraph& d) {
  int n = d.order();
  if (n > 8) throw std::invalid_argument("canonical_form guarded at n <= 8 (factorial scan)");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  ArcList arcs = d.arcs();
  do {
    std::uint64_t bits = 0;
    for (const Arc& a : arcs) {
      int u = perm[a.from], v = perm[a.to];
      bits |= std::uint64_t{1} << (u * (n - 1) + (v < u ? v : v - 1));
    }
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, best};
}

std::uint64_t total_digraphs(int n, bool allow_large) {
  if (n < 0) throw std::invalid_argument("negative order");
  int limit = allow_large ? 6 : 5;
  if (n > limit)
    throw std::invalid_argument("enumeration guarded at n <= " + std::to_string(limit));
  return std::uint64_t{1} << (n * (n - 1));
}

void for_each_digraph(int n, std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(const Digraph&, std::uint64_t)>& fn,
                      bool allow_large) {
  std::uint64_t total = total_digraphs(n, allow_large);
  if (lo > hi || hi > total) throw std::invalid_argument("bad enumeration range");
  for (std::uint64_t idx = lo; idx < hi; ++idx) fn(Digraph::from_encoding(n, idx), idx);
}

namespace {

struct Partial {
  std::uint64_t saturated = 0;
  bool have_min = false, have_max = false;
  int min_arcs = 0, max_arcs = 0;
  std::uint64_t min_index = 0, max_index = 0;
  std::set<std::uint64_t> canon;
  std::vector<std::uint64_t> encodings;

  void account(const Digraph& d, std::uint64_t idx, const OracleOptions& opt) {
    ++saturated;
    int arcs = d.arc_count();
    if (!have_min || arcs < min_arcs || (arcs == min_arcs && idx < min_index)) {
      have_min = true;
      min_arcs = arcs;
      min_index = idx;
    }
    if (!have_max || arcs > max_arcs || (arcs == max_arcs && idx < max_index)) {
      have_max = true;
      max_arcs = arcs;
      max_index = idx;
    }
    if (opt.canonical) canon.insert(canonical_form(d).bits);
    if (opt.collect_saturated) encodings.push_back(idx);
  }

  void merge(Partial&& o) {
    saturated += o.saturated;
    if (o.have_min &&
        (!have_min || o.min_arcs < min_arcs || (o.min_arcs == min_arcs && o.min_index < min_index))) {
      have_min = true;
      min_arcs = o.min_arcs;
      min_index = o.min_index;
    }
    if (o.have_max &&
        (!have_max || o.max_arcs > max_arcs || (o.max_arcs == max_arcs && o.max_index < max_index))) {
      have_max = true;
      max_arcs = o.max_arcs;
      max_index = o.max_index;
    }
    canon.merge(o.canon);
    encodings.insert(encodings.end(), o.encodings.begin(), o.encodings.end());
  }
};

// Work items are either index ranges (exhaustive) or slices of a
// pre-generated sample list; both make the reduction independent of the
// worker count.
void run_indices(int n, int k, const std::vector<std::uint64_t>& samples, std::uint64_t lo,
                 std::uint64_t hi, bool sampled, const OracleOptions& opt, Partial& acc) {
  for (std::uint64_t i = lo; i < hi; ++i) {
    std::uint64_t idx = sampled ? samples[i] : i;
    Digraph d = Digraph::from_encoding(n, idx);
    if (is_saturated_verdict(d, k)) acc.account(d, idx, opt);
  }
}

}  // namespace

OracleResult oracle_sat_ex(int n, int k, const OracleOptions& options) {
  if (k < 1) throw std::invalid_argument("oracle requires k >= 1");
  if (n < 1) throw std::invalid_argument("oracle requires n >= 1");
  bool sampled = false;
  std::uint64_t full_total = total_digraphs(n, options.allow_large);
  std::vector<std::uint64_t> samples;
  if (n >= 6) {
    // 2^30 saturation checks are out of desk range; with allow_large this
    // becomes a seeded uniform sample instead.
    sampled = true;
    std::mt19937_64 rng(options.seed);
    samples.reserve(options.sample_count);
    for (std::uint64_t i = 0; i < options.sample_count; ++i) samples.push_back(rng() % full_total);
  }
  std::uint64_t work_total = sampled ? samples.size() : full_total;

  auto start = std::chrono::steady_clock::now();
  int jobs = std::max(1, options.jobs);
  std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(
      std::max<std::uint64_t>(work_total / (static_cast<std::uint64_t>(jobs) * 16), 1), 1 << 16));
  std::uint64_t chunk_count = (work_total + chunk - 1) / chunk;

  std::vector<Partial> parts(static_cast<std::size_t>(chunk_count));
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_lock;

  auto worker = [&]() {
    while (true) {
      std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunk_count) break;
      std::uint64_t lo = c * chunk;
      std::uint64_t hi = std::min(work_total, lo + chunk);
      run_indices(n, k, samples, lo, hi, sampled, options, parts[c]);
      std::uint64_t d = done.fetch_add(hi - lo) + (hi - lo);
      if (options.progress) {
        std::lock_guard<std::mutex> g(progress_lock);
        options.progress(d, work_total);
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  Partial all;
  for (Partial& p : parts) all.merge(std::move(p));

  OracleResult res;
  res.n = n;
  res.k = k;
  res.exhaustive = !sampled;
  res.enumerated_total = work_total;
  res.labeled_saturated_count = all.saturated;
  if (options.canonical) res.canonical_saturated_count = all.canon.size();
  if (all.have_min) {
    res.sat = all.min_arcs;
    res.min_witness = Digraph::from_encoding(n, all.min_index);
    res.min_witness_index = all.min_index;
  }
  if (all.have_max) {
    res.ex = all.max_arcs;
    res.max_witness = Digraph::from_encoding(n, all.max_index);
    res.max_witness_index = all.max_index;
  }
  if (options.collect_saturated) {
    std::sort(all.encodings.begin(), all.encodings.end());
    res.saturated_encodings = std::move(all.encodings);
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

namespace {

void audit_one(const Digraph& d, std::uint64_t enc, int k, AuditReport& report) {
  int n = d.order();
  int kap = kappa(d);
  if (kap != k - 1) {
    report.failures.push_back({enc, "kappa", "kappa = " + std::to_string(kap) +
                                                  ", expected " + std::to_string(k - 1)});
    return;
  }
  // Scan every (k-1)-subset; those that separate are minimum separators.
  std::vector<int> subset;
  std::vector<int> rest;
  auto consider = [&](const std::vector<int>& s) {
    rest.clear();
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_s[v]) rest.push_back(v);
    if (rest.empty()) return;
    Digraph sub = d.induced(rest);
    SccDecomposition scc = strong_components(sub);
    if (rest.size() > 1 && scc.components.size() < 2) return;  // not a separator
    ++report.separators_checked;
    for (std::size_t i = 0; i < scc.components.size(); ++i) {
      for (std::size_t j = i + 1; j < scc.components.size(); ++j) {
        for (int a : scc.components[i]) {
          for (int b : scc.components[j]) {
            int u = rest[a], v = rest[b];
            if (!d.has_arc(u, v) || d.has_arc(v, u)) {
              report.failures.push_back(
                  {enc, "tpartite",
                   "components " + std::to_string(i) + "," + std::to_string(j) +
                       " miss forward arc or carry backward arc between " + std::to_string(u) +
                       " and " + std::to_string(v)});
              return;
            }
          }
        }
      }
    }
  };
  // Enumerate (k-1)-subsets of 0..n-1.
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(subset.size()) == k - 1) {
      consider(subset);
      return;
    }
    for (int v = from; v < n; ++v) {
      subset.push_back(v);
      rec(v + 1);
      subset.pop_back();
    }
  };
  rec(0);
}

}  // namespace

AuditReport audit_structure(const std::vector<Digraph>& saturated, int k) {
  if (k < 1) throw std::invalid_argument("audit requires k >= 1");
  AuditReport report;
  for (const Digraph& d : saturated) {
    if (d.order() < k + 1)
      throw std::invalid_argument("audit requires digraphs with n >= k+1");
    std::uint64_t enc = d.order() * (d.order() - 1) <= 64 ? d.encoding() : 0;
    audit_one(d, enc, k, report);
    ++report.digraphs_checked;
  }
  return report;
}

AuditReport audit_structure_encodings(int n, const std::vector<std::uint64_t>& encodings, int k) {
  std::vector<Digraph> ds;
  ds.reserve(encodings.size());
  for (std::uint64_t enc : encodings) ds.push_back(Digraph::from_encoding(n, enc));
  return audit_structure(ds, k);
}

}  // namespace digsat
