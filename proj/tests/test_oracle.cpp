#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "digsat/connectivity.hpp"
#include "digsat/constructions.hpp"
#include "digsat/formulas.hpp"
#include "digsat/json_io.hpp"
#include "digsat/oracle.hpp"
#include "digsat/saturation.hpp"

using digsat::Digraph;

TEST_CASE("enumeration counts and endpoints") {
  CHECK(digsat::total_digraphs(3) == 64);
  CHECK(digsat::total_digraphs(4) == 4096);
  CHECK_THROWS_AS(digsat::total_digraphs(6), std::invalid_argument);
  CHECK(digsat::total_digraphs(6, /*allow_large=*/true) == std::uint64_t{1} << 30);
  CHECK_THROWS_AS(digsat::total_digraphs(7, true), std::invalid_argument);

  int count = 0;
  bool first_empty = false, last_complete = false;
  digsat::for_each_digraph(3, 0, 64, [&](const Digraph& d, std::uint64_t idx) {
    if (idx == 0) first_empty = d.arc_count() == 0;
    if (idx == 63) last_complete = d.arc_count() == 6;
    ++count;
  });
  CHECK(count == 64);
  CHECK(first_empty);
  CHECK(last_complete);
}

TEST_CASE("canonical forms") {
  // all six single-arc digraphs on 3 vertices share one canonical form
  std::set<std::uint64_t> forms;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      if (u == v) continue;
      Digraph d(3);
      d.add_arc(u, v);
      forms.insert(digsat::canonical_form(d).bits);
    }
  CHECK(forms.size() == 1);

  // distinct canonical forms over all labeled digraphs = number of
  // unlabeled digraphs: 16 on 3 vertices, 218 on 4 (known counts)
  std::set<std::uint64_t> all3;
  digsat::for_each_digraph(3, 0, 64,
                           [&](const Digraph& d, std::uint64_t) { all3.insert(digsat::canonical_form(d).bits); });
  CHECK(all3.size() == 16);

  std::set<std::uint64_t> all4;
  digsat::for_each_digraph(4, 0, 4096,
                           [&](const Digraph& d, std::uint64_t) { all4.insert(digsat::canonical_form(d).bits); });
  CHECK(all4.size() == 218);

  // idempotent on its representative
  digsat::for_each_digraph(3, 0, 64, [&](const Digraph& d, std::uint64_t) {
    digsat::CanonicalForm cf = digsat::canonical_form(d);
    CHECK(digsat::canonical_form(Digraph::from_encoding(3, cf.bits)).bits == cf.bits);
  });

  CHECK_THROWS_AS(digsat::canonical_form(Digraph(9)), std::invalid_argument);
}

TEST_CASE("oracle sat/ex at n = 3") {
  digsat::OracleResult r = digsat::oracle_sat_ex(3, 2);
  CHECK(r.enumerated_total == 64);
  REQUIRE(r.sat.has_value());
  REQUIRE(r.ex.has_value());
  CHECK(*r.sat == 5);
  CHECK(*r.ex == 5);
  REQUIRE(r.min_witness.has_value());
  CHECK(digsat::is_saturated_verdict(*r.min_witness, 2));
  CHECK(r.min_witness->arc_count() == 5);
  CHECK(digsat::is_saturated_verdict(*r.max_witness, 2));
}

TEST_CASE("oracle sat/ex at n = 3, k = 1 matches the tournament count") {
  digsat::OracleOptions opt;
  opt.canonical = true;
  opt.collect_saturated = true;
  digsat::OracleResult r = digsat::oracle_sat_ex(3, 1, opt);
  CHECK(*r.sat == 3);
  CHECK(*r.ex == 3);
  CHECK(r.labeled_saturated_count == 6);  // 3! labeled transitive tournaments
  REQUIRE(r.canonical_saturated_count.has_value());
  CHECK(*r.canonical_saturated_count == 1);
  CHECK(r.saturated_encodings.size() == 6);
  for (std::uint64_t enc : r.saturated_encodings)
    CHECK(Digraph::from_encoding(3, enc).classify().is_acyclic_tournament);
}

TEST_CASE("oracle sat at (4,2) hits the closed form") {
  digsat::OracleResult r = digsat::oracle_sat_ex(4, 2);
  REQUIRE(r.sat.has_value());
  CHECK(*r.sat == 9);
  CHECK(*r.sat == digsat::sat_value(4, 2));
  CHECK(*r.ex == 9);
  CHECK(digsat::is_saturated_verdict(*r.min_witness, 2));
}

TEST_CASE("split enumeration ranges cover the space exactly once") {
  std::vector<int> hits(4096, 0);
  for (std::uint64_t lo = 0; lo < 4096; lo += 555)
    digsat::for_each_digraph(4, lo, std::min<std::uint64_t>(4096, lo + 555),
                             [&](const Digraph& d, std::uint64_t idx) {
                               CHECK(d.encoding() == idx);
                               ++hits[idx];
                             });
  CHECK(std::count(hits.begin(), hits.end(), 1) == 4096);
  CHECK_THROWS_AS(digsat::for_each_digraph(4, 9, 8, [](const Digraph&, std::uint64_t) {}),
                  std::invalid_argument);
}

TEST_CASE("oracle results do not depend on the worker count") {
  digsat::OracleOptions one, two, eight;
  one.jobs = 1;
  one.collect_saturated = true;
  one.canonical = true;
  two.jobs = 2;
  two.collect_saturated = true;
  two.canonical = true;
  eight.jobs = 8;
  eight.collect_saturated = true;
  eight.canonical = true;
  digsat::OracleResult r1 = digsat::oracle_sat_ex(4, 2, one);
  digsat::OracleResult r2 = digsat::oracle_sat_ex(4, 2, two);
  digsat::OracleResult r8 = digsat::oracle_sat_ex(4, 2, eight);
  CHECK(r1.sat == r2.sat);
  CHECK(r1.ex == r2.ex);
  CHECK(r1.labeled_saturated_count == r2.labeled_saturated_count);
  CHECK(r1.min_witness_index == r2.min_witness_index);
  CHECK(r1.max_witness_index == r2.max_witness_index);
  CHECK(r1.saturated_encodings == r2.saturated_encodings);
  CHECK(r1.sat == r8.sat);
  CHECK(r1.ex == r8.ex);
  CHECK(r1.min_witness_index == r8.min_witness_index);
  CHECK(r1.saturated_encodings == r8.saturated_encodings);
  CHECK(r1.canonical_saturated_count == r2.canonical_saturated_count);
  CHECK(r1.canonical_saturated_count == r8.canonical_saturated_count);
}

TEST_CASE("oracle progress reporting is monotone in chunks") {
  digsat::OracleOptions opt;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> calls;
  opt.progress = [&](std::uint64_t done, std::uint64_t total) { calls.push_back({done, total}); };
  digsat::oracle_sat_ex(3, 2, opt);
  REQUIRE(!calls.empty());
  CHECK(calls.back().first == 64);
  CHECK(calls.back().second == 64);
}

TEST_CASE("sampled mode at n = 6 is gated and deterministic") {
  CHECK_THROWS_AS(digsat::oracle_sat_ex(6, 2), std::invalid_argument);
  digsat::OracleOptions opt;
  opt.allow_large = true;
  opt.sample_count = 300;
  opt.seed = 9;
  digsat::OracleResult a = digsat::oracle_sat_ex(6, 2, opt);
  digsat::OracleResult b = digsat::oracle_sat_ex(6, 2, opt);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.enumerated_total == 300);
  CHECK(a.labeled_saturated_count == b.labeled_saturated_count);
  CHECK(a.sat == b.sat);
  opt.jobs = 4;
  digsat::OracleResult c = digsat::oracle_sat_ex(6, 2, opt);
  CHECK(a.labeled_saturated_count == c.labeled_saturated_count);
  CHECK(a.sat == c.sat);
}

TEST_CASE("witnesses re-verify as saturated") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}, {4, 3}}) {
    digsat::OracleResult r = digsat::oracle_sat_ex(n, k);
    if (r.min_witness) {
      CHECK(digsat::is_saturated_verdict(*r.min_witness, k));
      CHECK(r.min_witness->arc_count() == *r.sat);
    }
    if (r.max_witness) {
      CHECK(digsat::is_saturated_verdict(*r.max_witness, k));
      CHECK(r.max_witness->arc_count() == *r.ex);
    }
  }
}

TEST_CASE("structure audit passes on oracle output and fails on corruption") {
  digsat::OracleOptions opt;
  opt.collect_saturated = true;
  digsat::OracleResult r = digsat::oracle_sat_ex(4, 2, opt);
  digsat::AuditReport audit = digsat::audit_structure_encodings(4, r.saturated_encodings, 2);
  CHECK(audit.ok());
  CHECK(audit.digraphs_checked == r.labeled_saturated_count);
  CHECK(audit.separators_checked > 0);

  digsat::OracleResult r3 = digsat::oracle_sat_ex(4, 3, opt);
  digsat::AuditReport audit3 = digsat::audit_structure_encodings(4, r3.saturated_encodings, 3);
  CHECK(audit3.ok());

  // negative control: drop one inter-part arc of the layered construction
  Digraph broken = digsat::du(4, 2);
  broken.remove_arc(1, 2);  // parts {1} -> {2} arc
  digsat::AuditReport bad = digsat::audit_structure({broken}, 2);
  CHECK_FALSE(bad.ok());
}

TEST_CASE("oracle agrees with a fully brute-force reimplementation") {
  // saturation decided only by the exhaustive subset scan, no recursion,
  // no flow code
  auto saturated_brute = [](const Digraph& d, int k) {
    if (digsat::contains_k_strong_bruteforce(d, k)) return false;
    for (const digsat::Arc& e : d.complement_arcs())
      if (!digsat::contains_k_strong_bruteforce(d.plus_arc(e.from, e.to), k)) return false;
    return true;
  };
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {4, 2}}) {
    int min_arcs = -1, max_arcs = -1;
    std::uint64_t count = 0;
    digsat::for_each_digraph(n, 0, digsat::total_digraphs(n),
                             [&](const Digraph& d, std::uint64_t) {
                               if (!saturated_brute(d, k)) return;
                               ++count;
                               int a = d.arc_count();
                               if (min_arcs < 0 || a < min_arcs) min_arcs = a;
                               if (a > max_arcs) max_arcs = a;
                             });
    digsat::OracleResult r = digsat::oracle_sat_ex(n, k);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(r.labeled_saturated_count == count);
    if (count > 0) {
      CHECK(*r.sat == min_arcs);
      CHECK(*r.ex == max_arcs);
    } else {
      CHECK_FALSE(r.sat.has_value());
    }
  }
}

TEST_CASE("oracle json") {
  digsat::OracleResult r = digsat::oracle_sat_ex(3, 2);
  nlohmann::json j = digsat::oracle_result_to_json(r);
  CHECK(j["sat"] == 5);
  CHECK(j["ex"] == 5);
  CHECK(j["exhaustive"] == true);
  CHECK(j["min_witness"].is_string());
}
