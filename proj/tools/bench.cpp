// Times the exhaustive verification kernels with the serial reference scan
// and the OpenMP scan, checks the two agree, and reports the speedup.

#include "prack/pbrace.hpp"
#include "prack/solution.hpp"
#include "prack/twist.hpp"

#include <chrono>
#include <cstdio>

using namespace prack;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Timing {
  double serial = 0, parallel = 0;
  bool agree = true;
};

template <class Fn>
Timing time_both(Fn&& fn) {
  Timing t;
  set_scan_threads(1);
  auto s0 = clock_type::now();
  bool serial_result = fn();
  t.serial = seconds_since(s0);
  set_scan_threads(0);
  auto p0 = clock_type::now();
  bool parallel_result = fn();
  t.parallel = seconds_since(p0);
  t.agree = serial_result == parallel_result;
  return t;
}

void report(const char* name, const Timing& t) {
  std::printf("%-42s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              name, t.serial, t.parallel,
              t.parallel > 0 ? t.serial / t.parallel : 0.0,
              t.agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  // mod-32 brace: carrier 16, all sixteen parameters
  SkewBrace b = modular_brace(5);
  std::vector<elem> members(16);
  for (int i = 0; i < 16; ++i) members[i] = i;
  ParamSet y = param_set_circle_inverse(b.mul, members);
  SigmaFamily sig = brace_sigma(b, y);
  PShelf triv = trivial_p_shelf(b.add.carrier, y);
  auto [sigma, tau] = twisted_tables_unchecked(triv, sig);

  std::printf("carrier %d elements, %d parameters\n", b.size(), y.count());

  Timing ybe = time_both([&] {
    return solution_verify_direct(b.add.carrier, y, sigma, tau).pass();
  });
  report("Yang-Baxter equation, direct composition", ybe);

  Timing conds = time_both([&] {
    return solution_verify_conditions(b.add.carrier, y, sigma, tau).pass();
  });
  report("Yang-Baxter equation, condition triple", conds);

  Timing adm = time_both([&] { return admissible_twist_verify(sig, triv).pass(); });
  report("admissible twist conditions", adm);

  EtaFamily eta = eta_from_sigma(b.mul, sig);
  Timing ev = time_both([&] { return eta_verify(eta, EtaMode::reversible).pass(); });
  report("reversible eta laws", ev);

  bool ok = ybe.agree && conds.agree && adm.agree && ev.agree;
  std::printf("%s\n", ok ? "all kernels agree across modes" : "MISMATCH");
  return ok ? 0 : 1;
}
