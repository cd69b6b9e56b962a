#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "prack/json_io.hpp"
#include "prack/search.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace prack;
namespace fs = std::filesystem;

namespace {

fs::path workdir() {
  fs::path dir = fs::temp_directory_path() / "prack_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string file(const std::string& name, const std::string& payload) {
  fs::path p = workdir() / name;
  std::ofstream out(p);
  out << payload;
  return p.string();
}

int run_cli(const std::string& args) {
  const char* cli = std::getenv("PRACK_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " > " +
                    (workdir() / "out.txt").string() + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string cli_output() {
  std::ifstream in(workdir() / "out.txt");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("brace and parameter-set round trips") {
  SkewBrace b = fixtures::mod8();
  std::string path = file("mod8.json", brace_to_json(b));
  SkewBrace back = brace_from_json_file(path);
  CHECK(back.add.table == b.add.table);
  CHECK(back.mul.table == b.mul.table);
  CHECK(back.add.carrier.labels == b.add.carrier.labels);

  ParamSet y = fixtures::mod8_all_params(b);
  std::string ypath = file("y.json", param_set_to_json(y));
  ParamSet yback = param_set_from_json_file(ypath, b.add.carrier);
  CHECK(yback == y);
}

TEST_CASE("p-shelf, solution, sigma and reflection round trips") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  PShelf triv = trivial_p_shelf(b.add.carrier, y);
  PShelf pback = p_shelf_from_json_file(file("triv.json", p_shelf_to_json(triv)));
  CHECK(pback.table_equal(triv));
  CHECK(pback.params == triv.params);

  SigmaFamily sig = brace_sigma(b, y);
  SigmaFamily sback = sigma_from_json_file(file("sig.json", sigma_to_json(sig)));
  CHECK(sback.sigma == sig.sigma);

  ParamSolution sol = twisted_solution(triv, sig);
  ParamSolution solback =
      solution_from_json_file(file("sol.json", solution_to_json(sol)));
  CHECK(solback.table_equal(sol));
  CHECK(solback.flags == sol.flags);

  ReflectionFamily k = brace_reflection(b, y, 2, 1);
  ReflectionFamily kback = reflection_from_json_file(
      file("k.json", reflection_to_json(k)), b.add.carrier, y);
  CHECK(kback.table_equal(k));
}

TEST_CASE("eta and p-brace round trips") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  EtaFamily e = eta_from_sigma(b.mul, brace_sigma(b, y));
  EtaFamily eback = eta_from_json_file(file("eta.json", eta_to_json(e)));
  CHECK(eback.eta == e.eta);
  CHECK(eback.circ.table == e.circ.table);

  PBraceTable t = p_brace_from_eta(e);
  PBraceTable tback =
      p_brace_from_json_file(file("pb.json", p_brace_to_json(t)));
  CHECK(tback.table_equal(t));
}

TEST_CASE("bundle round trip with inline and referenced components") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  MagmaBundle bundle = skew_brace_bundle(b, y, 1, 1);
  MagmaBundle back =
      bundle_from_json_file(file("bundle.json", bundle_to_json(bundle)));
  CHECK(back.bullet == bundle.bullet);
  CHECK(back.tau == bundle.tau);
  CHECK(back.g == bundle.g);
  CHECK(back.ghat == bundle.ghat);
  CHECK(back.reflection.table_equal(bundle.reflection));

  // move the ghat component into its own file, referenced by name
  std::string full = bundle_to_json(bundle);
  size_t start = full.find('[', full.find("\"ghat\":"));
  int depth = 0;
  size_t end = start;
  for (size_t i = start; i < full.size(); ++i) {
    if (full[i] == '[') ++depth;
    if (full[i] == ']' && --depth == 0) {
      end = i;
      break;
    }
  }
  file("ghat_part.json", full.substr(start, end - start + 1));
  std::string patched = full.substr(0, start) + "\"ghat_part.json\"" +
                        full.substr(end + 1);
  MagmaBundle refback =
      bundle_from_json_file(file("bundle_ref.json", patched));
  CHECK(refback.ghat == bundle.ghat);
}

TEST_CASE("cli construct and verify pipeline") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  std::string brace_path = file("mod8.json", brace_to_json(b));
  std::string y_path = file("y.json", param_set_to_json(y));
  fs::path dir = workdir();

  CHECK(run_cli("construct brace-sigma --brace " + brace_path + " --params " +
                y_path + " --out " + (dir / "sigma.json").string()) == 0);
  CHECK(run_cli("construct conjugate-p-rack --brace " + brace_path +
                " --params " + y_path + " --out " +
                (dir / "prack.json").string()) == 0);
  CHECK(run_cli("construct twisted-solution --prack " +
                (dir / "prack.json").string() + " --sigma " +
                (dir / "sigma.json").string() + " --out " +
                (dir / "solution.json").string()) == 0);
  CHECK(run_cli("verify ybe " + (dir / "solution.json").string()) == 0);
  CHECK(run_cli("verify twist --prack " + (dir / "prack.json").string() +
                " --sigma " + (dir / "sigma.json").string()) == 0);
  CHECK(run_cli("--json verify ybe " + (dir / "solution.json").string()) == 0);
  CHECK(cli_output().find("\"pass\": true") != std::string::npos);

  // a reflection for the twisted solution (central shift satisfying the
  // exchange conditions), then a broken one
  CHECK(run_cli("construct brace-reflection --brace " + brace_path +
                " --params " + y_path + " --zeta 2 --m 1 --out " +
                (dir / "k.json").string()) == 0);
  CHECK(run_cli("verify reflection --solution " +
                (dir / "solution.json").string() + " --k " +
                (dir / "k.json").string()) == 0);

  ReflectionFamily bad = brace_reflection(b, y, 1, 1);  // breaks the exchange
  file("k_bad.json", reflection_to_json(bad));
  CHECK(run_cli("verify reflection --solution " +
                (dir / "solution.json").string() + " --k " +
                (dir / "k_bad.json").string()) == 1);
  CHECK(cli_output().find("FAIL") != std::string::npos);
}

TEST_CASE("cli verification failure and input error exit codes") {
  SkewBrace b = fixtures::mod8();
  ParamSet y = fixtures::mod8_all_params(b);
  PShelf triv = trivial_p_shelf(b.add.carrier, y);
  SigmaFamily sig = brace_sigma(b, y);
  ParamSolution sol = twisted_solution(triv, sig);
  std::vector<elem> tau = sol.tau;
  tau[3] = (tau[3] + 1) % 4;
  ParamSolution broken = sol;
  broken.tau = tau;  // bypasses validation: serialize the raw tables
  std::string path = file("broken.json", solution_to_json(broken));
  CHECK(run_cli("verify ybe " + path) == 1);

  std::string bad = file("garbage.json", "{ not json");
  CHECK(run_cli("verify ybe " + bad) == 2);
  std::string mis = file("mis.json", "{\"params\":{\"members\":[0]},\"sigma\":[[[[0]]]]}");
  CHECK(run_cli("verify ybe " + mis) == 2);
}

TEST_CASE("cli enumeration streams") {
  CHECK(run_cli("enumerate p-shelves --n 2 --m 1") == 0);
  std::string out = cli_output();
  long long lines = 0;
  for (char c : out)
    if (c == '\n') ++lines;
  // one table per line plus the trailing count line
  CHECK(lines == count_ordinary_shelves(2) + 1);

  SkewBrace b = fixtures::mod8();
  ParamSet y = param_set_circle_inverse(b.mul, {0, 3});
  std::string sol = file(
      "idsol.json", solution_to_json(identity_solution(b.add.carrier, y)));
  CHECK(run_cli("enumerate reflections --solution " + sol) == 0);
  out = cli_output();
  lines = 0;
  for (char c : out)
    if (c == '\n') ++lines;
  CHECK(lines == 576 + 1);  // (4!)^2 families

  CHECK(run_cli("enumerate p-shelves --n 4 --m 1") == 2);  // budget refusal
}

TEST_CASE("cli dressing and comparison") {
  SkewBrace t = trivial_brace(cyclic_group(4));
  ParamSet y2 = param_set_circle_inverse(t.mul, {0, 2});
  PShelf core = core_p_rack(t, y2);
  ParamSolution s = p_shelf_solution(core);
  std::vector<elem> kp(2 * 4);
  for (int i = 0; i < 2; ++i)
    for (elem a = 0; a < 4; ++a)
      kp[i * 4 + a] = ((a - 2 * y2.z(i) + 2) % 4 + 4) % 4;
  ReflectionFamily k = reflection_family(core.carrier, y2, kp);
  std::string spath = file("core_sol.json", solution_to_json(s));
  std::string kpath = file("core_k.json", reflection_to_json(k));
  CHECK(run_cli("dress --solution " + spath + " --k " + kpath +
                " --sites 3 --spectators 1 --spectator-params 1") == 0);

  SkewBrace b = fixtures::mod8();
  ParamSet ysmall = param_set_circle_inverse(b.mul, {0, 3});
  std::string prack = file(
      "triv17.json",
      p_shelf_to_json(trivial_p_shelf(b.add.carrier, ysmall)));
  std::string sig =
      file("sig17.json", sigma_to_json(brace_sigma(b, ysmall)));
  CHECK(run_cli("compare-reflections --prack " + prack + " --sigma " + sig) ==
        0);
  CHECK(cli_output().find("common:") != std::string::npos);

  CHECK(run_cli("rational --family 2 --z1 1 --z2 2 --z3 3 --samples 120 "
                "--seed 5") == 0);
}
