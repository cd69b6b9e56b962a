// Command-line front end: batch verification, construction, enumeration and
// report emission over the JSON schemas.

#include "CLI11.hpp"
#include "prack/json_io.hpp"
#include "prack/projective.hpp"
#include "prack/search.hpp"

#include <iostream>

using namespace prack;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

bool g_json = false;

int emit_report(const Report& rep) {
  if (g_json)
    std::cout << report_to_json(rep) << "\n";
  else
    std::cout << rep.summary() << "\n";
  return rep.pass() ? kExitPass : kExitFail;
}

bool input_error(const validation_error& e) {
  return e.code == "InputError" || e.code == "ShapeMismatch" ||
         e.code == "RangeError" || e.code == "LabelClash" ||
         e.code == "LabelCount" || e.code == "EmptyCarrier" ||
         e.code == "EmptyParamSet" || e.code == "DuplicateMember" ||
         e.code == "NotInvolutive" || e.code == "BudgetExceeded";
}

std::vector<elem> parse_int_list(const std::string& text) {
  std::vector<elem> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

struct VerifyArgs {
  std::string kind;
  std::string file, solution_file, k_file, prack_file, sigma_file;
  std::string mode = "reversible";
};

int run_verify(const VerifyArgs& a) {
  if (a.kind == "p-shelf") {
    PShelfData d = p_shelf_data_from_json_file(a.file);
    Report rep = p_shelf_check(d.carrier, d.params, d.table);
    if (rep.pass()) {
      bool rack = p_shelf_rack_flag(d.carrier, d.params, d.table);
      rep.add({"left-translation bijectivity", true, {},
               rack ? "p-rack" : "p-shelf only"});
    }
    return emit_report(rep);
  }
  if (a.kind == "ybe") {
    SolutionData d = solution_data_from_json_file(a.file);
    Report direct = solution_verify_direct(d.carrier, d.params, d.sigma, d.tau);
    Report conds =
        solution_verify_conditions(d.carrier, d.params, d.sigma, d.tau);
    for (auto& c : conds.conditions) direct.add(c);
    return emit_report(direct);
  }
  if (a.kind == "reflection") {
    SolutionData d = solution_data_from_json_file(a.solution_file);
    ParamSolution s = make_solution(d.carrier, d.params, d.sigma, d.tau);
    ReflectionFamily k =
        reflection_from_json_file(a.k_file, s.carrier, s.params);
    return emit_report(reflection_verify_direct(k, s));
  }
  if (a.kind == "twist") {
    PShelf p = p_shelf_from_json_file(a.prack_file);
    SigmaFamily sig = sigma_from_json_file(a.sigma_file);
    return emit_report(admissible_twist_verify(sig, p));
  }
  if (a.kind == "p-brace") {
    PBraceTable t = p_brace_from_json_file(a.file);
    return emit_report(p_brace_verify(t));
  }
  if (a.kind == "skew-p-brace") {
    PBraceTable t = p_brace_from_json_file(a.file);
    return emit_report(skew_p_brace_verify(t));
  }
  if (a.kind == "eta") {
    EtaFamily e = eta_from_json_file(a.file);
    EtaMode mode =
        a.mode == "general" ? EtaMode::general : EtaMode::reversible;
    return emit_report(eta_verify(e, mode));
  }
  if (a.kind == "magma") {
    MagmaBundle b = bundle_from_json_file(a.file);
    Report rep = magma_verify(b);
    if (rep.pass())
      for (auto& c : coideal_check(b).conditions) rep.add(c);
    return emit_report(rep);
  }
  std::cerr << "unknown verify kind: " << a.kind << "\n";
  return kExitInput;
}

struct ConstructArgs {
  std::string kind, out;
  std::string brace_file, params_file, prack_file, sigma_file, eta_file;
  std::string solution_file, k_file, pshelf_file;
  std::string mode = "brace";
  int xi = -1, zeta = 0, multiple = 1, sites = 3;
  std::string spectators, spectator_params;
};

int run_construct(const ConstructArgs& a) {
  std::string payload;
  if (a.kind == "conjugate-p-rack" || a.kind == "core-p-rack" ||
      a.kind == "affine-p-rack") {
    SkewBrace b = brace_from_json_file(a.brace_file);
    ParamSet y = param_set_from_json_file(a.params_file, b.add.carrier);
    PShelf p = a.kind == "conjugate-p-rack" ? conjugate_p_rack(b, y)
               : a.kind == "core-p-rack"
                   ? core_p_rack(b, y)
                   : affine_p_rack(b, y, a.xi < 0 ? b.zero : (elem)a.xi);
    payload = p_shelf_to_json(p);
  } else if (a.kind == "p-shelf-solution") {
    payload = solution_to_json(p_shelf_solution(p_shelf_from_json_file(a.pshelf_file)));
  } else if (a.kind == "twisted-solution") {
    PShelf p = p_shelf_from_json_file(a.prack_file);
    SigmaFamily sig = sigma_from_json_file(a.sigma_file);
    payload = solution_to_json(twisted_solution(p, sig));
  } else if (a.kind == "brace-sigma") {
    SkewBrace b = brace_from_json_file(a.brace_file);
    ParamSet y = param_set_from_json_file(a.params_file, b.add.carrier);
    SigmaMode mode = a.mode == "skew" ? SigmaMode::skew : SigmaMode::brace;
    payload = sigma_to_json(brace_sigma(b, y, mode));
  } else if (a.kind == "brace-reflection") {
    SkewBrace b = brace_from_json_file(a.brace_file);
    ParamSet y = param_set_from_json_file(a.params_file, b.add.carrier);
    std::optional<elem> xi;
    if (a.xi >= 0) xi = (elem)a.xi;
    payload =
        reflection_to_json(brace_reflection(b, y, (elem)a.zeta, a.multiple, xi));
  } else if (a.kind == "dressed-k") {
    SolutionData d = solution_data_from_json_file(a.solution_file);
    ParamSolution s = make_solution(d.carrier, d.params, d.sigma, d.tau);
    ReflectionFamily k =
        reflection_from_json_file(a.k_file, s.carrier, s.params);
    std::vector<elem> spect = parse_int_list(a.spectators);
    std::vector<elem> spp = parse_int_list(a.spectator_params);
    if (spect.empty()) spect.assign(a.sites - 2, 0);
    if (spp.empty()) spp.assign(a.sites - 2, 0);
    Report rep = sklyanin_dress_verify(s, k, a.sites, spect,
                                       std::vector<int>(spp.begin(), spp.end()));
    if (!rep.pass()) {
      std::cerr << rep.summary() << "\n";
      return kExitFail;
    }
    payload = dressed_to_json(sklyanin_dress(
        s, k, a.sites, spect, std::vector<int>(spp.begin(), spp.end())));
  } else if (a.kind == "p-brace-from-eta") {
    EtaFamily e = eta_from_json_file(a.eta_file);
    PBraceTable t = a.mode == "general" ? skew_p_brace_from_eta(e)
                                        : p_brace_from_eta(e);
    payload = p_brace_to_json(t);
  } else if (a.kind == "solution-from-eta") {
    EtaFamily e = eta_from_json_file(a.eta_file);
    EtaMode mode =
        a.mode == "general" ? EtaMode::general : EtaMode::reversible;
    payload = solution_to_json(solution_from_eta(e, mode));
  } else {
    std::cerr << "unknown construct kind: " << a.kind << "\n";
    return kExitInput;
  }
  if (a.out.empty()) {
    std::cout << payload << "\n";
  } else {
    write_text_file(a.out, payload);
    std::cout << "wrote " << a.out << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite parametric Yang-Baxter and reflection toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  long long budget = 5000000;
  app.add_flag("--json", g_json, "machine-readable reports");
  app.add_option("--threads", threads, "verification threads (1 = serial)");
  app.add_option("--budget", budget, "enumeration candidate budget");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run a verifier on files");
  verify->add_option("kind", va.kind)->required();
  verify->add_option("file", va.file);
  verify->add_option("--solution", va.solution_file);
  verify->add_option("--k", va.k_file);
  verify->add_option("--prack", va.prack_file);
  verify->add_option("--sigma", va.sigma_file);
  verify->add_option("--mode", va.mode);

  ConstructArgs ca;
  CLI::App* construct =
      app.add_subcommand("construct", "build and re-verify an object");
  construct->add_option("kind", ca.kind)->required();
  construct->add_option("--out", ca.out);
  construct->add_option("--brace", ca.brace_file);
  construct->add_option("--params", ca.params_file);
  construct->add_option("--prack", ca.prack_file);
  construct->add_option("--sigma", ca.sigma_file);
  construct->add_option("--eta", ca.eta_file);
  construct->add_option("--solution", ca.solution_file);
  construct->add_option("--k", ca.k_file);
  construct->add_option("--pshelf", ca.pshelf_file);
  construct->add_option("--mode", ca.mode);
  construct->add_option("--xi", ca.xi);
  construct->add_option("--zeta", ca.zeta);
  construct->add_option("--m", ca.multiple);
  construct->add_option("--sites", ca.sites);
  construct->add_option("--spectators", ca.spectators);
  construct->add_option("--spectator-params", ca.spectator_params);

  std::string enum_what, enum_solution;
  int enum_n = 2, enum_m = 1;
  bool rack_only = false, dedup = false;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "stream verified objects");
  enumerate->add_option("what", enum_what)->required();
  enumerate->add_option("--n", enum_n);
  enumerate->add_option("--m", enum_m);
  enumerate->add_flag("--rack-only", rack_only);
  enumerate->add_flag("--dedup", dedup);
  enumerate->add_option("--solution", enum_solution);

  int family = 1;
  std::string z1 = "2", z2 = "1", z3 = "3";
  long long samples = 200;
  uint64_t seed = 7;
  CLI::App* rational_cmd =
      app.add_subcommand("rational", "sampled exact checks of the map families");
  rational_cmd->add_option("--family", family)->check(CLI::Range(1, 4));
  rational_cmd->add_option("--z1", z1);
  rational_cmd->add_option("--z2", z2);
  rational_cmd->add_option("--z3", z3);
  rational_cmd->add_option("--samples", samples);
  rational_cmd->add_option("--seed", seed);

  std::string cmp_prack, cmp_sigma;
  CLI::App* compare = app.add_subcommand(
      "compare-reflections", "reflection sets of a shelf and its twist");
  compare->add_option("--prack", cmp_prack)->required();
  compare->add_option("--sigma", cmp_sigma)->required();

  ConstructArgs da;
  CLI::App* dress = app.add_subcommand("dress", "verify a dressed reflection");
  dress->add_option("--solution", da.solution_file)->required();
  dress->add_option("--k", da.k_file)->required();
  dress->add_option("--sites", da.sites);
  dress->add_option("--spectators", da.spectators);
  dress->add_option("--spectator-params", da.spectator_params);
  dress->add_option("--out", da.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitPass : kExitInput;
  }
  set_scan_threads(threads);

  try {
    if (verify->parsed()) return run_verify(va);
    if (construct->parsed()) return run_construct(ca);
    if (dress->parsed()) {
      da.kind = "dressed-k";
      return run_construct(da);
    }
    if (enumerate->parsed()) {
      EnumBudget eb{budget};
      if (enum_what == "p-shelves" || enum_what == "p-racks") {
        PShelfEnumOptions opt;
        opt.n = enum_n;
        opt.m = enum_m;
        opt.rack_only = rack_only || enum_what == "p-racks";
        opt.dedup = dedup;
        opt.budget = eb;
        long long count = 0;
        enumerate_p_shelves(opt, [&](const PShelf& p) {
          ++count;
          std::cout << p_shelf_to_json_line(p) << "\n";
        });
        std::cerr << count << " tables\n";
        return kExitPass;
      }
      if (enum_what == "reflections") {
        SolutionData d = solution_data_from_json_file(enum_solution);
        ParamSolution s = make_solution(d.carrier, d.params, d.sigma, d.tau);
        ReflEnumOptions opt;
        opt.budget = eb;
        long long count = 0;
        enumerate_reflections(s, opt, [&](const ReflectionFamily& k) {
          ++count;
          std::cout << reflection_to_json_line(k) << "\n";
        });
        std::cerr << count << " families\n";
        return kExitPass;
      }
      std::cerr << "unknown enumeration: " << enum_what << "\n";
      return kExitInput;
    }
    if (rational_cmd->parsed()) {
      MapFamilyTag tag = static_cast<MapFamilyTag>(family);
      Rat r1 = parse_rat(z1), r2 = parse_rat(z2), r3 = parse_rat(z3);
      SampledReport ybe = ybe_check_sampled(tag, r1, r2, r3, samples, seed);
      SampledReport rev = reversibility_check(tag, r1, r2, samples, seed);
      SampledReport bul = bullet_check(tag, r1, r2, samples, seed);
      Report rep;
      rep.subject = "rational map family " + std::to_string(family);
      auto add = [&](const char* law, const SampledReport& sr) {
        Condition c;
        c.law = law;
        c.pass = sr.pass();
        c.note = "samples=" + std::to_string(sr.samples) +
                 " poles=" + std::to_string(sr.poles_skipped) +
                 (sr.aborted ? " aborted" : "");
        if (!sr.first_failure.empty()) c.note += "; " + sr.first_failure;
        rep.add(c);
      };
      add("sampled Yang-Baxter equation", ybe);
      add("sampled reversibility", rev);
      add("bullet formula, symmetry and inverse", bul);
      return emit_report(rep);
    }
    if (compare->parsed()) {
      PShelf p = p_shelf_from_json_file(cmp_prack);
      SigmaFamily sig = sigma_from_json_file(cmp_sigma);
      ReflectionComparison cmp = compare_reflection_sets(p, sig, EnumBudget{budget});
      std::cout << "shelf-solution reflections: " << cmp.shelf_reflections.size()
                << "\ntwisted-solution reflections: "
                << cmp.twisted_reflections.size()
                << "\ncommon: " << cmp.common.size() << "\n";
      long long marked = 0;
      for (bool f : cmp.shelf_exchange_flags) marked += f ? 1 : 0;
      std::cout << "exchange-relation holders among shelf reflections: "
                << marked << "\n";
      return kExitPass;
    }
  } catch (const validation_error& e) {
    std::cerr << "error [" << e.code << "] " << e.what();
    if (!e.witness.empty()) std::cerr << " at " << witness_string(e.witness);
    std::cerr << "\n";
    return input_error(e) ? kExitInput : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
