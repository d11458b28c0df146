#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "digsat/connectivity.hpp"
#include "digsat/constructions.hpp"
#include "digsat/detection.hpp"
#include "digsat/dg_format.hpp"
#include "digsat/formulas.hpp"
#include "digsat/json_io.hpp"
#include "digsat/oracle.hpp"
#include "digsat/saturation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

int run_construct(const std::string& kind, int n, int k, std::uint64_t seed,
                  const std::string& plan_path, const std::string& plan_out,
                  const std::string& out_path) {
  digsat::Digraph d;
  digsat::KTreePlan plan;
  bool have_plan = false;
  if (kind == "ktree") {
    if (!plan_path.empty()) {
      std::ifstream in(plan_path);
      if (!in) throw std::runtime_error("cannot open " + plan_path);
      nlohmann::json j;
      in >> j;
      plan = digsat::plan_from_json(j);
    } else {
      if (k < 2) throw std::invalid_argument("ktree construction requires --k >= 2");
      plan = digsat::ktree_random(k - 1, n, seed).first;
    }
    d = digsat::ktree(plan);
    have_plan = true;
  } else if (kind == "du") {
    d = digsat::du(n, k);
  } else if (kind == "tournament") {
    d = digsat::acyclic_tournament(n);
  } else {
    throw std::invalid_argument("construct kind must be ktree, du or tournament");
  }
  if (!plan_out.empty()) {
    if (!have_plan) throw std::invalid_argument("--plan-out applies only to ktree");
    std::ofstream out(plan_out);
    if (!out) throw std::runtime_error("cannot open " + plan_out + " for writing");
    out << digsat::plan_to_json(plan).dump(2) << "\n";
  }
  emit(digsat::serialize_dg(d), out_path);
  return kExitOk;
}

int run_check(const std::string& mode, const std::string& file, std::optional<int> k,
              std::optional<int> c, std::optional<int> expect, bool as_json) {
  digsat::Digraph d = digsat::read_dg_file(file);
  if (mode == "kappa") {
    int value = digsat::kappa(d);
    if (as_json)
      std::cout << nlohmann::json{{"kappa", value}}.dump() << "\n";
    else
      std::cout << "kappa " << value << "\n";
    if (expect) return value == *expect ? kExitOk : kExitPropertyFails;
    return kExitOk;
  }
  if (mode == "scc") {
    digsat::SccDecomposition scc = digsat::strong_components(d);
    if (as_json) {
      std::cout << digsat::scc_to_json(scc).dump() << "\n";
    } else {
      std::cout << "components " << scc.components.size() << "\n";
      for (std::size_t i = 0; i < scc.components.size(); ++i) {
        std::cout << "component " << i << ":";
        for (int v : scc.components[i]) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    if (expect) return static_cast<int>(scc.components.size()) == *expect ? kExitOk : kExitPropertyFails;
    return kExitOk;
  }
  if (mode == "ksub") {
    if (!k) throw std::invalid_argument("check ksub requires --k");
    digsat::DetectionResult res = digsat::contains_k_strong(d, *k);
    if (as_json) {
      std::cout << digsat::detection_result_to_json(res).dump() << "\n";
    } else {
      std::cout << "contains " << (res.contains ? "true" : "false") << "\n";
      if (res.witness) {
        std::cout << "witness";
        for (int v : *res.witness) std::cout << " " << v;
        std::cout << "\n";
      }
    }
    return res.contains ? kExitOk : kExitPropertyFails;
  }
  if (mode == "saturated") {
    if (!k) throw std::invalid_argument("check saturated requires --k");
    digsat::SaturationReport report = digsat::is_saturated(d, *k);
    if (as_json) {
      std::cout << digsat::saturation_report_to_json(report).dump() << "\n";
    } else {
      std::cout << "saturated " << (report.verdict ? "true" : "false") << "\n";
      std::cout << "free " << (report.free ? "true" : "false") << "\n";
      for (const digsat::Arc& a : report.violating_arcs)
        std::cout << "violating " << a.from << " " << a.to << "\n";
    }
    return report.verdict ? kExitOk : kExitPropertyFails;
  }
  if (mode == "ctree") {
    if (!c) throw std::invalid_argument("check ctree requires --c");
    digsat::CTreeRecognition rec = digsat::is_directed_ctree(d, *c);
    if (as_json)
      std::cout << nlohmann::json{{"ctree", rec.member}}.dump() << "\n";
    else
      std::cout << "ctree " << (rec.member ? "true" : "false") << "\n";
    return rec.member ? kExitOk : kExitPropertyFails;
  }
  throw std::invalid_argument("check mode must be kappa, scc, ksub, saturated or ctree");
}

int run_oracle(int n, int k, int jobs, bool canonical, bool as_json, bool allow_large,
               std::uint64_t samples, std::uint64_t seed) {
  digsat::OracleOptions opt;
  opt.jobs = jobs;
  opt.canonical = canonical;
  opt.allow_large = allow_large;
  opt.sample_count = samples;
  opt.seed = seed;
  opt.progress = [](std::uint64_t done, std::uint64_t total) {
    std::fprintf(stderr, "progress %llu %llu\n", static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
  };
  digsat::OracleResult res = digsat::oracle_sat_ex(n, k, opt);
  if (as_json) {
    std::cout << digsat::oracle_result_to_json(res).dump() << "\n";
    return kExitOk;
  }
  std::cout << "n " << res.n << "\nk " << res.k << "\n";
  std::cout << "exhaustive " << (res.exhaustive ? "true" : "false") << "\n";
  std::cout << "enumerated " << res.enumerated_total << "\n";
  std::cout << "labeled_saturated " << res.labeled_saturated_count << "\n";
  if (res.canonical_saturated_count)
    std::cout << "canonical_saturated " << *res.canonical_saturated_count << "\n";
  if (res.sat)
    std::cout << "sat " << *res.sat << "\n";
  else
    std::cout << "sat none\n";
  if (res.ex)
    std::cout << "ex " << *res.ex << "\n";
  else
    std::cout << "ex none\n";
  return kExitOk;
}

int run_bounds(int n, int k, bool as_json) {
  digsat::BoundsReport r = digsat::BoundsReport::make(n, k);
  if (as_json) {
    std::cout << digsat::bounds_report_to_json(r).dump() << "\n";
    return kExitOk;
  }
  std::cout << "n " << r.n << "\nk " << r.k << "\n";
  std::cout << "sat " << r.sat << "\n";
  std::cout << "ktree_arcs " << r.ktree_arcs << "\n";
  if (r.du_arcs) std::cout << "du_arcs " << *r.du_arcs << "\n";
  std::cout << "conjecture " << r.conjecture.to_string() << " ("
            << r.conjecture.to_decimal_string() << ")\n";
  if (r.lemma43)
    std::cout << "lemma43 " << r.lemma43->to_string() << " (" << r.lemma43->to_decimal_string()
              << ")\n";
  if (r.thm44)
    std::cout << "thm44 " << r.thm44->to_string() << " (" << r.thm44->to_decimal_string() << ")\n";
  else
    std::cout << "thm44 not_applicable\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digraph saturation toolkit for k-strong connectivity"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a digraph family member");
  std::string construct_kind;
  int con_n = 0, con_k = 0;
  std::uint64_t con_seed = 0;
  std::string plan_path, plan_out, out_path;
  construct->add_option("kind", construct_kind, "ktree|du|tournament")->required();
  construct->add_option("--n", con_n, "vertex count");
  construct->add_option("--k", con_k, "connectivity threshold");
  construct->add_option("--seed", con_seed, "seed for random ktree plans");
  construct->add_option("--plan", plan_path, "replay a ktree plan (JSON)");
  construct->add_option("--plan-out", plan_out, "write the ktree plan used (JSON)");
  construct->add_option("-o,--output", out_path, ".dg output path (default: stdout)");

  // check
  auto* check = app.add_subcommand("check", "boolean and report checks on a .dg file");
  std::string check_mode, check_file;
  int check_k = 0, check_c = 0, check_expect = 0;
  bool check_json = false;
  check->add_option("mode", check_mode, "kappa|scc|ksub|saturated|ctree")->required();
  check->add_option("file", check_file, ".dg input")->required();
  auto* optk = check->add_option("--k", check_k, "connectivity threshold");
  auto* optc = check->add_option("--c", check_c, "clique size for ctree");
  auto* opte = check->add_option("--expect", check_expect, "expected value");
  check->add_flag("--json", check_json, "JSON output");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive sat/ex over all labeled digraphs");
  int or_n = 0, or_k = 0, or_jobs = 1;
  bool or_canonical = false, or_json = false, or_allow = false;
  std::uint64_t or_samples = 200000, or_seed = 1;
  oracle->add_option("--n", or_n, "vertex count")->required();
  oracle->add_option("--k", or_k, "connectivity threshold")->required();
  oracle->add_option("--jobs", or_jobs, "worker threads");
  oracle->add_flag("--canonical", or_canonical, "count isomorphism classes too");
  oracle->add_flag("--json", or_json, "JSON output");
  oracle->add_flag("--allow-large", or_allow, "permit n=6 (seeded sampling, not exhaustive)");
  oracle->add_option("--samples", or_samples, "sample count for n=6");
  oracle->add_option("--seed", or_seed, "sampling seed for n=6");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form values and bounds");
  int b_n = 0, b_k = 0;
  bool b_json = false;
  bounds->add_option("--n", b_n, "vertex count")->required();
  bounds->add_option("--k", b_k, "connectivity threshold")->required();
  bounds->add_flag("--json", b_json, "JSON output");

  // export
  auto* exp = app.add_subcommand("export", "convert a .dg file");
  std::string export_format, export_file;
  exp->add_option("format", export_format, "dot")->required();
  exp->add_option("file", export_file, ".dg input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*construct)
      return run_construct(construct_kind, con_n, con_k, con_seed, plan_path, plan_out, out_path);
    if (*check)
      return run_check(check_mode, check_file,
                       *optk ? std::optional<int>(check_k) : std::nullopt,
                       *optc ? std::optional<int>(check_c) : std::nullopt,
                       *opte ? std::optional<int>(check_expect) : std::nullopt, check_json);
    if (*oracle)
      return run_oracle(or_n, or_k, or_jobs, or_canonical, or_json, or_allow, or_samples, or_seed);
    if (*bounds) return run_bounds(b_n, b_k, b_json);
    if (*exp) {
      if (export_format != "dot") throw std::invalid_argument("export format must be dot");
      std::cout << digsat::to_dot(digsat::read_dg_file(export_file));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
