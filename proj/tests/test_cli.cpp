#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "digsat/constructions.hpp"
#include "digsat/dg_format.hpp"
#include "digsat/formulas.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "digsat_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string(DIGSAT_BIN) + " " + args + " > " + out_file.string() + " 2> " +
                    (work_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(status);
  res.out = slurp(out_file);
  return res;
}

}  // namespace

TEST_CASE("construct du then check saturated") {
  fs::path dg = work_dir() / "d.dg";
  RunResult con = run_cli("construct du --n 6 --k 3 -o " + dg.string());
  CHECK(con.exit_code == 0);
  CHECK(slurp(dg) == digsat::serialize_dg(digsat::du(6, 3)));

  CHECK(run_cli("check saturated --k 3 " + dg.string()).exit_code == 0);
  CHECK(run_cli("check saturated --k 2 " + dg.string()).exit_code == 1);
  CHECK(run_cli("check kappa --expect 2 " + dg.string()).exit_code == 0);
  CHECK(run_cli("check kappa --expect 3 " + dg.string()).exit_code == 1);
}

TEST_CASE("construct ktree deterministically, plan replay") {
  fs::path dg = work_dir() / "t.dg";
  fs::path plan = work_dir() / "t.plan.json";
  RunResult con =
      run_cli("construct ktree --n 7 --k 3 --seed 5 --plan-out " + plan.string() + " -o " +
              dg.string());
  CHECK(con.exit_code == 0);
  CHECK(slurp(dg) == digsat::serialize_dg(digsat::ktree_random(2, 7, 5).second));

  CHECK(run_cli("check kappa --expect 2 " + dg.string()).exit_code == 0);
  CHECK(run_cli("check ctree --c 2 " + dg.string()).exit_code == 0);
  CHECK(run_cli("check ctree --c 1 " + dg.string()).exit_code == 1);
  CHECK(run_cli("check ksub --k 3 " + dg.string()).exit_code == 1);

  fs::path dg2 = work_dir() / "t2.dg";
  RunResult replay = run_cli("construct ktree --plan " + plan.string() + " -o " + dg2.string());
  CHECK(replay.exit_code == 0);
  CHECK(slurp(dg2) == slurp(dg));
}

TEST_CASE("construct tournament and scc output") {
  fs::path dg = work_dir() / "at.dg";
  CHECK(run_cli("construct tournament --n 4 -o " + dg.string()).exit_code == 0);
  CHECK(slurp(dg) == digsat::serialize_dg(digsat::acyclic_tournament(4)));
  RunResult scc = run_cli("check scc --expect 4 " + dg.string());
  CHECK(scc.exit_code == 0);
  CHECK(scc.out.find("components 4") == 0);
  CHECK(run_cli("check saturated --k 1 " + dg.string()).exit_code == 0);
}

TEST_CASE("check ksub positive with witness") {
  fs::path dg = work_dir() / "k3.dg";
  std::ofstream(dg) << "n 3\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n";
  RunResult res = run_cli("check ksub --k 2 " + dg.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("contains true") != std::string::npos);
  CHECK(res.out.find("witness 0 1 2") != std::string::npos);

  RunResult js = run_cli("check ksub --k 2 --json " + dg.string());
  CHECK(js.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["contains"] == true);
}

TEST_CASE("oracle json output") {
  RunResult res = run_cli("oracle --n 4 --k 2 --json");
  CHECK(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["sat"] == 9);
  CHECK(j["ex"] == 9);
  CHECK(j["n"] == 4);
  CHECK(j["exhaustive"] == true);
}

TEST_CASE("bounds output") {
  RunResult res = run_cli("bounds --n 4 --k 2 --json");
  CHECK(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["sat"] == 9);
  CHECK(j["lemma43"]["num"] == 28);
  CHECK(j["lemma43"]["den"] == 3);
  CHECK(j["thm44"]["decimal"] == "11.5");

  RunResult text = run_cli("bounds --n 4 --k 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("sat 9") != std::string::npos);
  CHECK(text.out.find("lemma43 28/3 (9.333333)") != std::string::npos);
}

TEST_CASE("export dot") {
  fs::path dg = work_dir() / "e.dg";
  std::ofstream(dg) << "n 2\n0 1\n";
  RunResult res = run_cli("export dot " + dg.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out == "digraph D {\n  0;\n  1;\n  0 -> 1;\n}\n");
}

TEST_CASE("errors exit with code 2") {
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
  CHECK(run_cli("check kappa /nonexistent/file.dg").exit_code == 2);
  CHECK(run_cli("construct du --n 3 --k 3").exit_code == 2);  // n < 2(k-1)
  CHECK(run_cli("check ksub missing-k.dg").exit_code == 2);
  CHECK(run_cli("oracle --n 6 --k 2").exit_code == 2);  // needs --allow-large

  fs::path bad = work_dir() / "bad.dg";
  std::ofstream(bad) << "n 2\n1 1\n";
  RunResult res = run_cli("check kappa " + bad.string());
  CHECK(res.exit_code == 2);
}
